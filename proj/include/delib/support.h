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

#ifndef DELIB_SUPPORT_H_
#define DELIB_SUPPORT_H_

#include <cstddef>

#include "delib/attitude_matrix.h"
#include "delib/ids.h"

namespace delib {

struct ElicitationWeights {
  double c_explore = 1.0;
  double prior_mean = 0.5;
  double prior_weight = 1.0;

  // Throws kParameter unless all fields are finite, c_explore and
  // prior_weight are non-negative and prior_mean lies in [0, 1].
  void Validate() const;
};

struct SupportEstimate {
  IdeaId idea;
  double mean = 0.0;  // prior-smoothed approval rate
  double ci_low = 0.0;
  double ci_high = 1.0;
  std::size_t sample_size = 0;
};

// Two-sided 95% normal quantile.
inline constexpr double kWilsonZ = 1.959963984540054;

struct Interval {
  double low;
  double high;
};

// Wilson score interval for `successes` out of `trials`; [0, 1] when
// trials = 0.
Interval WilsonInterval(double successes, double trials, double z = kWilsonZ);

// mean = (approvals + prior_mean * prior_weight) / (responses + prior_weight),
// interval from the raw responses. The interval is widened to contain the
// mean when a heavy prior pulls it outside.
SupportEstimate EstimateSupport(const AttitudeMatrix& matrix, IdeaId idea,
                                const ElicitationWeights& weights = {});

}  // namespace delib

#endif  // DELIB_SUPPORT_H_
