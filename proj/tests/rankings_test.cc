// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "delib/rankings.h"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "delib/approval_profile.h"
#include "delib/error.h"
#include "delib/slates.h"
#include "delib/support.h"
#include "test_util.h"

namespace delib {
namespace {

using testing::CodeOf;
using testing::I;
using testing::Masks;
using testing::MatrixFromMasks;
using testing::P;
using testing::RandomMasks;

std::vector<IdeaId> Iota(std::uint32_t m) {
  std::vector<IdeaId> out;
  for (std::uint32_t p = 0; p < m; ++p) out.push_back(I(p));
  return out;
}

TEST(ProportionalRanking, UnanimityFallsBackToIdOrder) {
  const Ranking r = ProportionalRanking(MatrixFromMasks(Masks(5, 0b11111u), 5));
  EXPECT_EQ(r.order, Iota(5));
  ASSERT_EQ(r.provenance.size(), 5u);
  // Each voter's l-th slate idea adds 1/l.
  for (std::size_t t = 0; t < 5; ++t) EXPECT_DOUBLE_EQ(r.provenance[t], 5.0 / (t + 1));
}

TEST(ProportionalRanking, FourTwoBlocs) {
  // Four voters approve exactly {a,b,c}; two approve exactly {d,e,f}.
  const Masks masks = {0b000111u, 0b000111u, 0b000111u, 0b000111u, 0b111000u, 0b111000u};
  const Ranking r = ProportionalRanking(MatrixFromMasks(masks, 6));
  std::size_t majority = 0;
  for (std::size_t t = 0; t < 3; ++t) majority += r.order[t].value() < 3;
  EXPECT_EQ(majority, 2u);
  // Gains 4, then 2 (second majority idea) against 2 (first minority idea),
  // tie to the lower id.
  EXPECT_DOUBLE_EQ(r.provenance[0], 4.0);
  EXPECT_DOUBLE_EQ(r.provenance[1], 2.0);
  EXPECT_DOUBLE_EQ(r.provenance[2], 2.0);
}

TEST(ProportionalRanking, SingleIdeaAndEmpty) {
  EXPECT_EQ(ProportionalRanking(MatrixFromMasks({1u}, 1)).order, Iota(1));
  AttitudeMatrix empty;
  empty.AddParticipant();
  EXPECT_EQ(CodeOf([&] { ProportionalRanking(empty); }), ErrorCode::kUndefined);
}

TEST(ProportionalRankingProperty, PrefixesAreGreedySlates) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    const std::size_t m = 1 + rng() % 10;
    const AttitudeMatrix matrix = MatrixFromMasks(RandomMasks(rng, n, m, 0.4), m);
    const Ranking r = ProportionalRanking(matrix);
    ASSERT_EQ(r.order.size(), m);
    std::set<IdeaId> distinct(r.order.begin(), r.order.end());
    EXPECT_EQ(distinct.size(), m);
    for (std::size_t k = 1; k <= m; ++k) {
      std::vector<IdeaId> prefix(r.order.begin(), r.order.begin() + k);
      std::sort(prefix.begin(), prefix.end());
      EXPECT_EQ(prefix, GreedySlate(matrix, k, ScoringKind::kHarmonic).ideas);
    }
  }
}

TEST(ProportionalRankingProperty, TwoThirdsOneThirdBlocs) {
  for (std::size_t n : {6u, 9u, 12u, 30u}) {
    const std::size_t big = (2 * n + 2) / 3;
    const std::size_t pool = 9;
    Masks masks;
    for (std::size_t i = 0; i < n; ++i) {
      masks.push_back(i < big ? (1u << pool) - 1 : ((1u << pool) - 1) << pool);
    }
    const Ranking r = ProportionalRanking(MatrixFromMasks(masks, 2 * pool));
    for (std::size_t t = 1; 3 * t <= pool; ++t) {
      std::size_t majority = 0;
      for (std::size_t s = 0; s < 3 * t; ++s) majority += r.order[s].value() < pool;
      EXPECT_GE(majority + 1, 2 * t) << "n=" << n << " t=" << t;
      EXPECT_LE(majority, 2 * t + 1) << "n=" << n << " t=" << t;
    }
  }
}

TEST(ElicitationRanking, ExplorationFavorsUnexposedIdea) {
  AttitudeMatrix m;
  for (int i = 0; i < 100; ++i) m.AddParticipant();
  m.AddUnattributedIdea("seen");
  m.AddUnattributedIdea("fresh");
  // Idea 0 gets 100 exposures with half approvals: support 0.5, as the prior.
  for (std::uint32_t i = 0; i < 100; ++i) {
    m.RecordAttitude(P(i), I(0), i % 2 == 0 ? Attitude::kApprove : Attitude::kDisapprove);
  }
  const Ranking r = ElicitationRanking(m);
  EXPECT_EQ(r.order, (std::vector<IdeaId>{I(1), I(0)}));
  EXPECT_GT(r.provenance[0], r.provenance[1]);
}

TEST(ElicitationRanking, ZeroExplorationRanksBySupport) {
  AttitudeMatrix m;
  for (int i = 0; i < 4; ++i) m.AddParticipant();
  for (int p = 0; p < 3; ++p) m.AddUnattributedIdea("i" + std::to_string(p));
  m.RecordAttitude(P(0), I(0), Attitude::kDisapprove);
  m.RecordAttitude(P(0), I(2), Attitude::kApprove);
  m.RecordAttitude(P(1), I(2), Attitude::kApprove);
  ElicitationWeights w;
  w.c_explore = 0.0;
  const Ranking r = ElicitationRanking(m, w);
  EXPECT_EQ(r.order, (std::vector<IdeaId>{I(2), I(1), I(0)}));
  for (std::size_t t = 0; t < 3; ++t) {
    EXPECT_DOUBLE_EQ(r.provenance[t], EstimateSupport(m, r.order[t], w).mean);
  }
}

TEST(ElicitationRanking, FreshMatrixIsIdOrder) {
  AttitudeMatrix m;
  m.AddParticipant();
  for (int p = 0; p < 6; ++p) m.AddUnattributedIdea("i" + std::to_string(p));
  EXPECT_EQ(ElicitationRanking(m).order, Iota(6));
}

TEST(ElicitationRankingProperty, NoIdeaStarves) {
  // Show the top-ranked idea to a participant and record a response; every
  // idea's exposure keeps growing.
  AttitudeMatrix m;
  const std::size_t n = 2000;
  for (std::size_t i = 0; i < n; ++i) m.AddParticipant();
  const std::size_t ideas = 5;
  for (std::size_t p = 0; p < ideas; ++p) m.AddUnattributedIdea("i" + std::to_string(p));
  std::mt19937_64 rng(37);
  const double approval[] = {0.9, 0.7, 0.5, 0.3, 0.1};
  std::vector<std::size_t> next(ideas, 0);
  std::vector<std::uint64_t> checkpoint(ideas, 0);
  for (int phase = 0; phase < 4; ++phase) {
    for (int step = 0; step < 300; ++step) {
      const IdeaId top = ElicitationRanking(m).order.front();
      const bool yes = std::bernoulli_distribution(approval[top.index()])(rng);
      m.RecordAttitude(P(static_cast<std::uint32_t>(next[top.index()]++)), top,
                       yes ? Attitude::kApprove : Attitude::kDisapprove);
    }
    for (std::size_t p = 0; p < ideas; ++p) {
      const std::uint64_t e = m.exposure(I(static_cast<std::uint32_t>(p)));
      EXPECT_GT(e, checkpoint[p]) << "idea " << p << " phase " << phase;
      checkpoint[p] = e;
    }
  }
}

}  // namespace
}  // namespace delib
