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

#ifndef DELIB_LOOP_H_
#define DELIB_LOOP_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "delib/attitude_matrix.h"
#include "delib/ids.h"
#include "delib/landscape.h"
#include "delib/population.h"
#include "delib/routing.h"
#include "delib/slates.h"
#include "delib/support.h"

namespace delib {

struct SenseMakingConfig {
  std::size_t slate_k = 3;
  ScoringKind scoring = ScoringKind::kHarmonic;
  std::size_t landscape_k = 2;
  std::uint64_t seed = 0;  // k-means seeding
  ClusterSpace space = ClusterSpace::kEmbedded;
  bool landscape = true;   // skip the landscape (and cluster recovery) if false
};

// One synchronous deliberation run against a simulated population. All
// randomness derives from population.seed, except k-means seeding which uses
// sense_making.seed.
struct LoopConfig {
  std::size_t rounds = 10;
  std::size_t initial_ideas = 0;    // contributed in round 1 on top of ideas_per_round
  std::size_t ideas_per_round = 5;
  std::size_t query_budget_per_round = 100;
  RoutingPolicy routing_policy = RoutingPolicy::kUncertainty;
  ElicitationWeights weights;
  SenseMakingConfig sense_making;
  PopulationConfig population;
  // Slates are solved exactly when C(m, k) fits under this cap, greedily
  // otherwise; the same solver is used for estimate and oracle.
  std::uint64_t exact_cap = 1'000'000;

  // Throws kParameter on zero slate_k or landscape_k, invalid weights or an
  // invalid population.
  void Validate() const;
};

struct RoundMetrics {
  std::size_t round = 0;  // 1-based
  std::size_t participants = 0;
  std::size_t active_participants = 0;
  std::size_t ideas = 0;
  double completion_rate = 0.0;
  // Slate chosen from elicited data: its score on that data, and on the truth.
  double estimated_slate_score = 0.0;
  double estimated_slate_true_score = 0.0;
  // Best slate on the truth (over active participants).
  double oracle_slate_score = 0.0;
  bool oracle_exact = false;
  // Fraction of active participants approving some idea of the estimated slate.
  double slate_coverage = 0.0;
  // |estimated slate symmetric-difference oracle slate|.
  double slate_distance = 0.0;
  // Mean |rank difference| between proportional rankings on estimate and truth.
  double ranking_displacement = 0.0;
  // Mean |estimated support - true support| over ideas.
  double support_mae = 0.0;
  // Best-matching accuracy of landscape clusters against mixture components,
  // over active participants. Empty when the landscape was not computed.
  std::optional<double> cluster_recovery;
  double exposure_gini = 0.0;
  std::size_t queries_served = 0;
  std::uint64_t exposure_increments = 0;
  bool plan_shortfall = false;
  std::vector<IdeaId> estimated_slate;
  std::vector<IdeaId> oracle_slate;
};

struct MetricsTimeline {
  std::string policy;
  std::uint64_t seed = 0;
  std::vector<RoundMetrics> rounds;
};

// Names and values of the numeric per-round metrics, in export order.
const std::vector<std::string_view>& MetricNames();
std::vector<std::optional<double>> MetricValues(const RoundMetrics& metrics);

enum class LoopPhase { kIdeas, kAttitudes, kSenseMaking, kChurn };

// Optional observer called after each phase with the live matrix.
using LoopHook =
    std::function<void(std::size_t round, LoopPhase phase, const AttitudeMatrix& matrix)>;

// Per round: (1) sampled active authors contribute ideas, (2) the routing
// policy plans queries that the population answers, (3) slates, rankings,
// support estimates and the landscape are computed on a snapshot and scored
// against the ground truth, then churn is applied. Deterministic in config.
MetricsTimeline RunLoop(const LoopConfig& config, const LoopHook& hook = {});

// RunLoop once per policy with the same population seed.
std::vector<MetricsTimeline> ComparePolicies(const LoopConfig& config,
                                             std::span<const RoutingPolicy> policies);

// Gini coefficient of non-negative values; 0 for an empty or all-zero input.
double GiniCoefficient(std::span<const double> values);

// Largest fraction of items whose cluster maps to their label under a
// one-to-one matching of clusters to labels. Labels must be < 16 distinct
// values; returns 0 for empty input.
double MatchingAccuracy(std::span<const std::size_t> clusters,
                        std::span<const std::size_t> labels);

// Mean |position in a - position in b| over ideas; both must order the same ids.
double RankDisplacement(std::span<const IdeaId> a, std::span<const IdeaId> b);

}  // namespace delib

#endif  // DELIB_LOOP_H_
