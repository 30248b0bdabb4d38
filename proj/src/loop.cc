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

#include "delib/loop.h"

#include <algorithm>
#include <cmath>
#include <iterator>

#include <fmt/format.h>

#include "delib/approval_profile.h"
#include "delib/error.h"
#include "delib/random.h"
#include "delib/rankings.h"

namespace delib {

namespace {

constexpr std::uint64_t kStreamAuthors = 0x617574686f72;
constexpr std::uint64_t kStreamRouting = 0x726f757465;
constexpr std::uint64_t kStreamAnswers = 0x616e73776572;

std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t stream, std::uint64_t round) {
  Rng rng = MakeRng(seed, {stream, round});
  return rng();
}

Slate SolveSlate(const ApprovalProfile& profile, std::size_t k, ScoringKind kind,
                 std::uint64_t cap, bool* exact) {
  const std::size_t m = profile.num_ideas();
  *exact = BinomialCoefficient(m, std::min(k, m)) <= cap;
  if (*exact) return ExactSlate(profile, k, kind, ExactOptions{cap});
  return GreedySlate(profile, k, kind);
}

void ScoreSenseMaking(const LoopConfig& config, const AttitudeMatrix& matrix,
                      const PopulationModel& model, RoundMetrics& out) {
  const SenseMakingConfig& sm = config.sense_making;
  const std::size_t m = matrix.num_ideas();
  out.participants = matrix.num_participants();
  out.active_participants = matrix.num_active();
  out.ideas = m;
  if (m == 0) return;
  out.completion_rate = matrix.CompletionRate();

  const GroundTruth truth = model.Truth();
  const ProfileOptions active_only{UnknownHandling::kNonApproval, true};
  const ApprovalProfile estimate = ApprovalProfile::FromMatrix(matrix, active_only);
  const ApprovalProfile oracle = ApprovalProfile::FromMatrix(truth.matrix, active_only);

  bool exact = false;
  const Slate est_slate = SolveSlate(estimate, sm.slate_k, sm.scoring, config.exact_cap, &exact);
  const Slate oracle_slate = SolveSlate(oracle, sm.slate_k, sm.scoring, config.exact_cap, &exact);
  out.oracle_exact = exact;
  out.estimated_slate = est_slate.ideas;
  out.oracle_slate = oracle_slate.ideas;
  out.estimated_slate_score = est_slate.score;
  out.estimated_slate_true_score = SlateScore(oracle, est_slate.ideas, sm.scoring);
  out.oracle_slate_score = oracle_slate.score;
  if (oracle.num_voters() > 0) {
    out.slate_coverage = SlateScore(oracle, est_slate.ideas, ScoringKind::kCoverage) /
                         static_cast<double>(oracle.num_voters());
  }
  std::vector<IdeaId> diff;
  std::set_symmetric_difference(est_slate.ideas.begin(), est_slate.ideas.end(),
                                oracle_slate.ideas.begin(), oracle_slate.ideas.end(),
                                std::back_inserter(diff));
  out.slate_distance = static_cast<double>(diff.size());

  out.ranking_displacement = RankDisplacement(ProportionalRanking(estimate).order,
                                              ProportionalRanking(oracle).order);

  double abs_error = 0.0;
  std::vector<double> exposures(m);
  for (std::size_t p = 0; p < m; ++p) {
    const IdeaId idea(static_cast<std::uint32_t>(p));
    abs_error += std::fabs(EstimateSupport(matrix, idea, config.weights).mean - truth.support[p]);
    exposures[p] = static_cast<double>(matrix.exposure(idea));
  }
  out.support_mae = abs_error / static_cast<double>(m);
  out.exposure_gini = GiniCoefficient(exposures);

  const std::size_t n = matrix.num_participants();
  if (sm.landscape && n >= 2 && sm.landscape_k <= n) {
    LandscapeOptions options;
    options.k = sm.landscape_k;
    options.seed = sm.seed;
    options.space = sm.space;
    const Landscape landscape = BuildLandscape(matrix, options);
    std::vector<std::size_t> clusters;
    std::vector<std::size_t> labels;
    for (std::size_t i = 0; i < n; ++i) {
      if (!matrix.IsActive(ParticipantId(static_cast<std::uint32_t>(i)))) continue;
      clusters.push_back(landscape.clustering.assignment[i]);
      labels.push_back(truth.bloc[i]);
    }
    if (!clusters.empty()) out.cluster_recovery = MatchingAccuracy(clusters, labels);
  }
}

}  // namespace

void LoopConfig::Validate() const {
  if (sense_making.slate_k == 0) {
    throw Error(ErrorCode::kParameter, "loop config: slate k must be positive");
  }
  if (sense_making.landscape_k == 0) {
    throw Error(ErrorCode::kParameter, "loop config: landscape k must be positive");
  }
  weights.Validate();
  population.Validate();
}

MetricsTimeline RunLoop(const LoopConfig& config, const LoopHook& hook) {
  config.Validate();
  const std::uint64_t seed = config.population.seed;
  MetricsTimeline timeline;
  timeline.policy = std::string(RoutingPolicyName(config.routing_policy));
  timeline.seed = seed;
  if (config.rounds == 0) return timeline;

  PopulationModel model = PopulationModel::Generate(config.population, seed);
  AttitudeMatrix matrix;
  for (std::size_t i = 0; i < model.num_participants(); ++i) matrix.AddParticipant();

  for (std::size_t round = 1; round <= config.rounds; ++round) {
    RoundMetrics metrics;
    metrics.round = round;

    // Ideas elicitation.
    std::size_t new_ideas = config.ideas_per_round;
    if (round == 1) new_ideas += config.initial_ideas;
    Rng authors = MakeRng(seed, {kStreamAuthors, round});
    const std::vector<ParticipantId> contributors = matrix.ActiveParticipants();
    for (std::size_t t = 0; t < new_ideas && !contributors.empty(); ++t) {
      const ParticipantId author = contributors[UniformIndex(authors, contributors.size())];
      const std::size_t p = model.AddIdea(author.index());
      matrix.AddIdea(fmt::format("idea-{}", p), author);
    }
    if (hook) hook(round, LoopPhase::kIdeas, matrix);

    // Attitudes elicitation.
    const std::uint64_t exposure_before = matrix.total_exposure();
    const std::vector<ParticipantId> active = matrix.ActiveParticipants();
    const QueryPlan plan =
        Plan(config.routing_policy, matrix, active, config.query_budget_per_round,
             config.weights, DeriveSeed(seed, kStreamRouting, round));
    const std::uint64_t answer_seed = DeriveSeed(seed, kStreamAnswers, round);
    for (const QueryPair& q : plan.pairs) {
      matrix.RecordAttitude(q.participant, q.idea,
                            model.SampleAttitude(q.participant.index(), q.idea.index(),
                                                 answer_seed));
    }
    metrics.queries_served = plan.pairs.size();
    metrics.exposure_increments = matrix.total_exposure() - exposure_before;
    metrics.plan_shortfall = plan.shortfall;
    if (hook) hook(round, LoopPhase::kAttitudes, matrix);

    // Sense-making reads an immutable snapshot.
    const MatrixSnapshot snapshot = matrix.Snapshot();
    ScoreSenseMaking(config, *snapshot, model, metrics);
    if (hook) hook(round, LoopPhase::kSenseMaking, matrix);
    timeline.rounds.push_back(std::move(metrics));

    if (round == config.rounds) break;
    const ChurnStep churn = model.StepChurn(round, seed);
    for (std::size_t i : churn.departures) {
      matrix.Deactivate(ParticipantId(static_cast<std::uint32_t>(i)));
    }
    for (std::size_t a = 0; a < churn.arrivals.size(); ++a) matrix.AddParticipant();
    if (hook) hook(round, LoopPhase::kChurn, matrix);
  }
  return timeline;
}

std::vector<MetricsTimeline> ComparePolicies(const LoopConfig& config,
                                             std::span<const RoutingPolicy> policies) {
  std::vector<MetricsTimeline> out;
  out.reserve(policies.size());
  for (RoutingPolicy policy : policies) {
    LoopConfig run = config;
    run.routing_policy = policy;
    out.push_back(RunLoop(run));
  }
  return out;
}

}  // namespace delib
