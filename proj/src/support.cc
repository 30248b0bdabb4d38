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

#include "delib/support.h"

#include <algorithm>
#include <cmath>

#include "delib/error.h"

namespace delib {

void ElicitationWeights::Validate() const {
  const bool finite = std::isfinite(c_explore) && std::isfinite(prior_mean) &&
                      std::isfinite(prior_weight);
  if (!finite || c_explore < 0.0 || prior_weight < 0.0 || prior_mean < 0.0 ||
      prior_mean > 1.0) {
    throw Error(ErrorCode::kParameter, "invalid elicitation weights");
  }
}

Interval WilsonInterval(double successes, double trials, double z) {
  if (trials <= 0.0) return {0.0, 1.0};
  const double p = successes / trials;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / trials;
  const double center = (p + z2 / (2.0 * trials)) / denom;
  const double half =
      z / denom * std::sqrt(p * (1.0 - p) / trials + z2 / (4.0 * trials * trials));
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

SupportEstimate EstimateSupport(const AttitudeMatrix& matrix, IdeaId idea,
                                const ElicitationWeights& weights) {
  const auto approvals = static_cast<double>(matrix.approvals(idea));
  const std::size_t responses = matrix.responses(idea);
  const auto n = static_cast<double>(responses);

  SupportEstimate estimate;
  estimate.idea = idea;
  estimate.sample_size = responses;
  const double denom = n + weights.prior_weight;
  estimate.mean = denom > 0.0
                      ? (approvals + weights.prior_mean * weights.prior_weight) / denom
                      : weights.prior_mean;
  const Interval ci = WilsonInterval(approvals, n);
  estimate.ci_low = std::min(ci.low, estimate.mean);
  estimate.ci_high = std::max(ci.high, estimate.mean);
  return estimate;
}

}  // namespace delib
