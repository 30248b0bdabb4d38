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
#include <cmath>
#include <numeric>

#include "delib/error.h"
#include "delib/slates.h"

namespace delib {

Ranking ProportionalRanking(const ApprovalProfile& profile) {
  if (profile.num_ideas() == 0) {
    throw Error(ErrorCode::kUndefined, "cannot rank an empty idea set");
  }
  Ranking ranking;
  for (const GreedyStep& step : GreedySequence(profile, ScoringKind::kHarmonic,
                                               profile.num_ideas())) {
    ranking.order.push_back(step.idea);
    ranking.provenance.push_back(step.gain);
  }
  return ranking;
}

Ranking ProportionalRanking(const AttitudeMatrix& matrix) {
  return ProportionalRanking(ApprovalProfile::FromMatrix(matrix));
}

Ranking ElicitationRanking(const AttitudeMatrix& matrix,
                           const ElicitationWeights& weights) {
  weights.Validate();
  const std::size_t m = matrix.num_ideas();
  const double log_total = std::log(static_cast<double>(matrix.total_exposure()) + 1.0);

  std::vector<double> priority(m);
  for (std::size_t p = 0; p < m; ++p) {
    const IdeaId idea(static_cast<std::uint32_t>(p));
    const double bonus = std::sqrt(
        log_total / (static_cast<double>(matrix.exposure(idea)) + 1.0));
    priority[p] = EstimateSupport(matrix, idea, weights).mean + weights.c_explore * bonus;
  }

  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return priority[a] > priority[b];
  });

  Ranking ranking;
  for (std::size_t p : order) {
    ranking.order.emplace_back(static_cast<std::uint32_t>(p));
    ranking.provenance.push_back(priority[p]);
  }
  return ranking;
}

}  // namespace delib
