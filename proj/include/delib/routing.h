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

#ifndef DELIB_ROUTING_H_
#define DELIB_ROUTING_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "delib/attitude_matrix.h"
#include "delib/ids.h"
#include "delib/rankings.h"
#include "delib/support.h"

namespace delib {

struct QueryPair {
  ParticipantId participant;
  IdeaId idea;
  friend bool operator==(const QueryPair&, const QueryPair&) = default;
};

// Which (participant, idea) cells to ask about next. Never contains a known
// cell, an inactive participant, or the same cell twice.
struct QueryPlan {
  std::vector<QueryPair> pairs;
  std::string policy_name;
  std::uint64_t seed = 0;
  // Set when fewer than `budget` unknown active cells were available.
  bool shortfall = false;
};

enum class RoutingPolicy { kUniform, kRanking, kUncertainty };

std::string_view RoutingPolicyName(RoutingPolicy policy);
// Accepts "uniform", "ranking" and "uncertainty"; throws kParameter otherwise.
RoutingPolicy ParseRoutingPolicy(std::string_view name);

// Uniform sample without replacement from the unknown cells of the given
// participants that are active in the matrix.
QueryPlan PlanUniform(const AttitudeMatrix& matrix,
                      std::span<const ParticipantId> active, std::size_t budget,
                      std::uint64_t seed);

struct RankWeighting {
  // The idea at 1-based rank r is drawn with weight r^-exponent.
  double exponent = 1.0;
};

// Each query draws an idea by rank weight, redrawing ideas with no unknown
// active cell left, then a participant uniformly among those still unknown on
// it. The ranking must cover exactly the current ideas.
QueryPlan PlanRankingProportional(const AttitudeMatrix& matrix,
                                  const Ranking& ranking,
                                  std::span<const ParticipantId> active,
                                  std::size_t budget, std::uint64_t seed,
                                  RankWeighting weighting = {});

// Each query goes to the idea whose 95% Wilson interval is widest, counting
// queries already planned this call as extra responses at the observed rate
// (prior_mean before any response). Ties to the lowest id; participant drawn
// uniformly among those still unknown on it.
QueryPlan PlanUncertainty(const AttitudeMatrix& matrix,
                          std::span<const ParticipantId> active,
                          std::size_t budget, const ElicitationWeights& weights,
                          std::uint64_t seed);

// Dispatch by policy. kRanking routes along ElicitationRanking(matrix, weights).
QueryPlan Plan(RoutingPolicy policy, const AttitudeMatrix& matrix,
               std::span<const ParticipantId> active, std::size_t budget,
               const ElicitationWeights& weights, std::uint64_t seed);

}  // namespace delib

#endif  // DELIB_ROUTING_H_
