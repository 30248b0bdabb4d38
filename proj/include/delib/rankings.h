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

#ifndef DELIB_RANKINGS_H_
#define DELIB_RANKINGS_H_

#include <vector>

#include "delib/approval_profile.h"
#include "delib/attitude_matrix.h"
#include "delib/ids.h"
#include "delib/support.h"

namespace delib {

// Total order over all ideas. provenance[t] is the value that placed
// order[t] at position t (marginal score or priority).
struct Ranking {
  std::vector<IdeaId> order;
  std::vector<double> provenance;
};

// Sequential harmonic greedy: position t+1 takes the idea with the largest
// marginal harmonic score given positions 1..t, ties to the lowest id. Every
// length-k prefix is the greedy harmonic slate of size k. Throws kUndefined
// when there are no ideas.
Ranking ProportionalRanking(const ApprovalProfile& profile);
Ranking ProportionalRanking(const AttitudeMatrix& matrix);

// Upper-confidence ordering for global querying:
//   priority(p) = support(p) + c_explore * sqrt(ln(T + 1) / (exposure(p) + 1))
// with T the total exposure count. Descending priority, ties to the lowest id.
Ranking ElicitationRanking(const AttitudeMatrix& matrix,
                           const ElicitationWeights& weights = {});

}  // namespace delib

#endif  // DELIB_RANKINGS_H_
