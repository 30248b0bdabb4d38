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

#include "delib/routing.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include "delib/error.h"
#include "delib/population.h"
#include "delib/rankings.h"
#include "delib/support.h"
#include "test_util.h"

namespace delib {
namespace {

using testing::CodeOf;
using testing::I;
using testing::P;

AttitudeMatrix Blank(std::size_t n, std::size_t m) {
  AttitudeMatrix matrix;
  for (std::size_t i = 0; i < n; ++i) matrix.AddParticipant();
  for (std::size_t p = 0; p < m; ++p) matrix.AddUnattributedIdea("i" + std::to_string(p));
  return matrix;
}

// Independent evaluation of the Wilson score interval.
std::pair<double, double> OracleWilson(double k, double n) {
  const double z = 1.959963984540054;
  const double phat = k / n;
  const double denom = 1.0 + z * z / n;
  const double center = (phat + z * z / (2 * n)) / denom;
  const double half = z / denom * std::sqrt(phat * (1 - phat) / n + z * z / (4 * n * n));
  return {center - half, center + half};
}

TEST(EstimateSupport, PriorSmoothedMean) {
  AttitudeMatrix m = Blank(5, 1);
  for (std::uint32_t i = 0; i < 3; ++i) m.RecordAttitude(P(i), I(0), Attitude::kApprove);
  m.RecordAttitude(P(3), I(0), Attitude::kDisapprove);
  const SupportEstimate e = EstimateSupport(m, I(0));
  EXPECT_DOUBLE_EQ(e.mean, 0.7);
  EXPECT_EQ(e.sample_size, 4u);
  const auto [lo, hi] = OracleWilson(3, 4);
  EXPECT_NEAR(e.ci_low, lo, 1e-12);
  EXPECT_NEAR(e.ci_high, hi, 1e-12);
}

TEST(EstimateSupport, NoResponsesGivesPrior) {
  const SupportEstimate e = EstimateSupport(Blank(3, 1), I(0));
  EXPECT_DOUBLE_EQ(e.mean, 0.5);
  EXPECT_EQ(e.ci_low, 0.0);
  EXPECT_EQ(e.ci_high, 1.0);
  EXPECT_EQ(e.sample_size, 0u);
}

TEST(EstimateSupport, LargeSample) {
  AttitudeMatrix m = Blank(10'000, 1);
  for (std::uint32_t i = 0; i < 10'000; ++i) {
    m.RecordAttitude(P(i), I(0), i % 5 < 3 ? Attitude::kApprove : Attitude::kDisapprove);
  }
  const SupportEstimate e = EstimateSupport(m, I(0));
  EXPECT_NEAR(e.mean, 0.6, 0.01);
  EXPECT_LT(e.ci_high - e.ci_low, 0.02);
  const auto [lo, hi] = OracleWilson(6000, 10'000);
  EXPECT_NEAR(e.ci_low, lo, 1e-12);
  EXPECT_NEAR(e.ci_high, hi, 1e-12);
}

TEST(EstimateSupport, IntervalAlwaysContainsMean) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 30;
    AttitudeMatrix m = Blank(n, 1);
    for (std::uint32_t i = 0; i < n; ++i) {
      const int r = static_cast<int>(rng() % 3);
      if (r < 2) m.RecordAttitude(P(i), I(0), r == 0 ? Attitude::kApprove : Attitude::kDisapprove);
    }
    ElicitationWeights w;
    w.prior_mean = std::uniform_real_distribution<double>(0, 1)(rng);
    w.prior_weight = std::uniform_real_distribution<double>(0, 50)(rng);
    const SupportEstimate e = EstimateSupport(m, I(0), w);
    EXPECT_LE(e.ci_low, e.mean);
    EXPECT_LE(e.mean, e.ci_high);
    EXPECT_GE(e.ci_low, 0.0);
    EXPECT_LE(e.ci_high, 1.0);
  }
}

TEST(EstimateSupport, InvalidWeightsRejected) {
  ElicitationWeights w;
  w.prior_mean = 1.5;
  EXPECT_EQ(CodeOf([&] { w.Validate(); }), ErrorCode::kParameter);
  w = {};
  w.c_explore = -1;
  EXPECT_EQ(CodeOf([&] { w.Validate(); }), ErrorCode::kParameter);
  w = {};
  w.prior_weight = NAN;
  EXPECT_EQ(CodeOf([&] { w.Validate(); }), ErrorCode::kParameter);
}

TEST(EstimateSupportProperty, ConsistentUnderPopulationResponses) {
  // Idea at distance = radius from every participant with noise: true
  // approval rate 1/2. After 1000 responses the estimate is within 0.05 in at
  // least 99% of seeds.
  PopulationConfig config;
  config.n0 = 1000;
  config.latent_dim = 1;
  config.mixture = {{1.0, {0.0}, {{0.0}}}};
  config.noise_sigma = 0.3;
  int within = 0;
  const int seeds = 300;
  for (int s = 0; s < seeds; ++s) {
    PopulationModel model = PopulationModel::Generate(config, s);
    model.AddIdeaAt({config.approval_radius}, 0);
    AttitudeMatrix m = Blank(1000, 1);
    for (std::uint32_t i = 0; i < 1000; ++i) m.RecordAttitude(P(i), I(0), model.SampleAttitude(i, 0, s));
    within += std::fabs(EstimateSupport(m, I(0)).mean - 0.5) < 0.05;
  }
  EXPECT_GE(within, static_cast<int>(0.99 * seeds));
}

std::set<std::pair<std::uint32_t, std::uint32_t>> PairSet(const QueryPlan& plan) {
  std::set<std::pair<std::uint32_t, std::uint32_t>> out;
  for (const QueryPair& q : plan.pairs) out.emplace(q.participant.value(), q.idea.value());
  return out;
}

TEST(PlanUniform, BudgetZeroAndExhaustion) {
  AttitudeMatrix m = Blank(3, 3);
  m.RecordAttitude(P(0), I(0), Attitude::kApprove);
  m.RecordAttitude(P(1), I(2), Attitude::kDisapprove);
  m.Deactivate(P(2));
  const auto active = m.ActiveParticipants();
  EXPECT_TRUE(PlanUniform(m, active, 0, 1).pairs.empty());
  const QueryPlan all = PlanUniform(m, active, 100, 1);
  const std::set<std::pair<std::uint32_t, std::uint32_t>> expected = {{0, 1}, {0, 2}, {1, 0},
                                                                       {1, 1}};
  EXPECT_EQ(PairSet(all), expected);
  EXPECT_EQ(all.pairs.size(), 4u);
  EXPECT_TRUE(all.shortfall);
  EXPECT_EQ(all.policy_name, "uniform");
}

TEST(PlanUniform, SinglePairFrequencies) {
  AttitudeMatrix m = Blank(2, 2);
  const auto active = m.ActiveParticipants();
  std::map<std::pair<std::uint32_t, std::uint32_t>, int> counts;
  const int draws = 10'000;
  for (int s = 0; s < draws; ++s) {
    const QueryPlan plan = PlanUniform(m, active, 1, s);
    ASSERT_EQ(plan.pairs.size(), 1u);
    ++counts[{plan.pairs[0].participant.value(), plan.pairs[0].idea.value()}];
  }
  ASSERT_EQ(counts.size(), 4u);
  for (const auto& [pair, c] : counts) EXPECT_NEAR(c / static_cast<double>(draws), 0.25, 0.02);
}

TEST(PlanUniform, NoDuplicatesAndDeterministic) {
  AttitudeMatrix m = Blank(10, 10);
  const auto active = m.ActiveParticipants();
  const QueryPlan a = PlanUniform(m, active, 50, 99);
  const QueryPlan b = PlanUniform(m, active, 50, 99);
  EXPECT_EQ(a.pairs, b.pairs);
  EXPECT_EQ(PairSet(a).size(), 50u);
  EXPECT_FALSE(a.shortfall);
}

Ranking IdOrder(std::size_t m) {
  Ranking r;
  for (std::uint32_t p = 0; p < m; ++p) {
    r.order.push_back(I(p));
    r.provenance.push_back(0.0);
  }
  return r;
}

TEST(PlanRankingProportional, RankOneFrequencyForTwoIdeas) {
  AttitudeMatrix m = Blank(1, 2);
  const auto active = m.ActiveParticipants();
  int first = 0;
  const int draws = 20'000;
  for (int s = 0; s < draws; ++s) {
    const QueryPlan plan = PlanRankingProportional(m, IdOrder(2), active, 1, s);
    first += plan.pairs.at(0).idea == I(0);
  }
  EXPECT_NEAR(first / static_cast<double>(draws), 1.0 / 1.5, 0.02);
}

TEST(PlanRankingProportional, ExhaustedIdeaIsSkipped) {
  AttitudeMatrix m = Blank(4, 3);
  for (std::uint32_t i = 0; i < 4; ++i) m.RecordAttitude(P(i), I(0), Attitude::kApprove);
  const QueryPlan plan = PlanRankingProportional(m, IdOrder(3), m.ActiveParticipants(), 8, 5);
  EXPECT_EQ(plan.pairs.size(), 8u);
  for (const QueryPair& q : plan.pairs) EXPECT_NE(q.idea, I(0));
  EXPECT_FALSE(plan.shortfall);
  EXPECT_TRUE(PlanRankingProportional(m, IdOrder(3), m.ActiveParticipants(), 0, 5).pairs.empty());
}

TEST(PlanRankingProportional, ShortfallWhenNothingUnknown) {
  AttitudeMatrix m = Blank(1, 1);
  m.RecordAttitude(P(0), I(0), Attitude::kApprove);
  const QueryPlan plan = PlanRankingProportional(m, IdOrder(1), m.ActiveParticipants(), 3, 1);
  EXPECT_TRUE(plan.pairs.empty());
  EXPECT_TRUE(plan.shortfall);
}

TEST(PlanRankingProportional, RankingMustCoverIdeas) {
  AttitudeMatrix m = Blank(1, 3);
  EXPECT_EQ(CodeOf([&] { PlanRankingProportional(m, IdOrder(2), m.ActiveParticipants(), 1, 1); }),
            ErrorCode::kParameter);
}

TEST(PlanUncertainty, WidestIntervalFirst) {
  AttitudeMatrix m = Blank(200, 2);
  for (std::uint32_t i = 0; i < 100; ++i) {
    m.RecordAttitude(P(i), I(0), i % 3 == 0 ? Attitude::kApprove : Attitude::kDisapprove);
  }
  const QueryPlan plan = PlanUncertainty(m, m.ActiveParticipants(), 1, {}, 3);
  ASSERT_EQ(plan.pairs.size(), 1u);
  EXPECT_EQ(plan.pairs[0].idea, I(1));
}

TEST(PlanUncertainty, TiesGoToLowestId) {
  AttitudeMatrix m = Blank(10, 4);
  const QueryPlan plan = PlanUncertainty(m, m.ActiveParticipants(), 1, {}, 3);
  EXPECT_EQ(plan.pairs.at(0).idea, I(0));
}

TEST(PlanUncertainty, MaxWidthShrinksOverRounds) {
  PopulationConfig config;
  config.n0 = 300;
  config.mixture = {{1.0, {0.0, 0.0}, {{1.0, 0.0}, {0.0, 1.0}}}};
  PopulationModel model = PopulationModel::Generate(config, 8);
  AttitudeMatrix m = Blank(300, 0);
  for (std::size_t p = 0; p < 10; ++p) {
    model.AddIdea(p);
    m.AddIdea("i" + std::to_string(p), P(static_cast<std::uint32_t>(p)));
  }
  auto max_width = [&] {
    double widest = 0.0;
    for (std::uint32_t p = 0; p < 10; ++p) {
      const SupportEstimate e = EstimateSupport(m, I(p));
      widest = std::max(widest, e.ci_high - e.ci_low);
    }
    return widest;
  };
  std::vector<double> widths = {max_width()};
  for (int round = 1; round <= 50; ++round) {
    const QueryPlan plan = PlanUncertainty(m, m.ActiveParticipants(), 20, {}, round);
    for (const QueryPair& q : plan.pairs) {
      m.RecordAttitude(q.participant, q.idea,
                       model.SampleAttitude(q.participant.index(), q.idea.index(), round));
    }
    if (round % 10 == 0) widths.push_back(max_width());
  }
  for (std::size_t t = 1; t < widths.size(); ++t) EXPECT_LT(widths[t], widths[t - 1]);
}

TEST(PlanUncertainty, EveryIdeaEventuallyQueried) {
  AttitudeMatrix m = Blank(50, 12);
  std::mt19937_64 rng(61);
  for (int round = 0; round < 60; ++round) {
    const QueryPlan plan = PlanUncertainty(m, m.ActiveParticipants(), 1, {}, round);
    for (const QueryPair& q : plan.pairs) {
      m.RecordAttitude(q.participant, q.idea,
                       std::bernoulli_distribution(0.3)(rng) ? Attitude::kApprove
                                                             : Attitude::kDisapprove);
    }
  }
  for (std::uint32_t p = 0; p < 12; ++p) EXPECT_GT(m.responses(I(p)), 0u) << "idea " << p;
}

TEST(RoutingProperty, PlansNeverTouchKnownOrInactiveCells) {
  std::mt19937_64 rng(71);
  AttitudeMatrix m = Blank(5, 2);
  std::size_t checked = 0;
  for (int step = 0; step < 4000; ++step) {
    const int op = static_cast<int>(rng() % 10);
    if (op == 0) m.AddParticipant();
    if (op == 1) m.AddUnattributedIdea("i" + std::to_string(m.num_ideas()));
    if (op == 2 && m.num_active() > 1) {
      const auto active = m.ActiveParticipants();
      m.Deactivate(active[rng() % active.size()]);
    }
    const auto policy = static_cast<RoutingPolicy>(rng() % 3);
    const std::size_t budget = rng() % 6;
    const auto active = m.ActiveParticipants();
    const QueryPlan plan = Plan(policy, m, active, budget, {}, rng());
    ASSERT_LE(plan.pairs.size(), budget);
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    for (const QueryPair& q : plan.pairs) {
      ASSERT_TRUE(m.IsActive(q.participant));
      ASSERT_EQ(m.Get(q.participant, q.idea), Attitude::kUnknown);
      ASSERT_TRUE(seen.emplace(q.participant.value(), q.idea.value()).second);
      ++checked;
    }
    for (const QueryPair& q : plan.pairs) {
      m.RecordAttitude(q.participant, q.idea,
                       rng() % 2 ? Attitude::kApprove : Attitude::kDisapprove);
    }
  }
  EXPECT_GT(checked, 1000u);
}

TEST(RoutingProperty, DeterministicPerSeed) {
  AttitudeMatrix m = Blank(20, 8);
  m.RecordAttitude(P(3), I(2), Attitude::kApprove);
  const auto active = m.ActiveParticipants();
  for (RoutingPolicy policy :
       {RoutingPolicy::kUniform, RoutingPolicy::kRanking, RoutingPolicy::kUncertainty}) {
    EXPECT_EQ(Plan(policy, m, active, 30, {}, 5).pairs, Plan(policy, m, active, 30, {}, 5).pairs);
  }
}

TEST(RoutingPolicyNames, RoundTripAndReject) {
  for (RoutingPolicy policy :
       {RoutingPolicy::kUniform, RoutingPolicy::kRanking, RoutingPolicy::kUncertainty}) {
    EXPECT_EQ(ParseRoutingPolicy(RoutingPolicyName(policy)), policy);
  }
  EXPECT_EQ(CodeOf([] { ParseRoutingPolicy("bandit"); }), ErrorCode::kParameter);
}

}  // namespace
}  // namespace delib
