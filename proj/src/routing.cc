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
#include <random>

#include "delib/error.h"
#include "delib/random.h"

namespace delib {

namespace {

std::vector<ParticipantId> ActiveSubset(const AttitudeMatrix& matrix,
                                        std::span<const ParticipantId> active) {
  std::vector<ParticipantId> out;
  for (ParticipantId p : active) {
    if (matrix.HasParticipant(p) && matrix.IsActive(p)) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// For each idea, the participants (ascending) whose entry is still unknown.
std::vector<std::vector<ParticipantId>> UnknownByIdea(
    const AttitudeMatrix& matrix, const std::vector<ParticipantId>& participants) {
  const std::size_t m = matrix.num_ideas();
  std::vector<std::vector<ParticipantId>> out(m);
  std::vector<bool> known(m);
  for (ParticipantId i : participants) {
    std::fill(known.begin(), known.end(), false);
    for (const auto& entry : matrix.Row(i)) known[entry.first.index()] = true;
    for (std::size_t p = 0; p < m; ++p) {
      if (!known[p]) out[p].push_back(i);
    }
  }
  return out;
}

ParticipantId TakeUniform(std::vector<ParticipantId>& pool, Rng& rng) {
  const std::size_t j = UniformIndex(rng, pool.size());
  const ParticipantId chosen = pool[j];
  pool[j] = pool.back();
  pool.pop_back();
  return chosen;
}

QueryPlan EmptyPlan(RoutingPolicy policy, std::uint64_t seed) {
  QueryPlan plan;
  plan.policy_name = std::string(RoutingPolicyName(policy));
  plan.seed = seed;
  return plan;
}

}  // namespace

std::string_view RoutingPolicyName(RoutingPolicy policy) {
  switch (policy) {
    case RoutingPolicy::kUniform:
      return "uniform";
    case RoutingPolicy::kRanking:
      return "ranking";
    case RoutingPolicy::kUncertainty:
      return "uncertainty";
  }
  return "unknown";
}

RoutingPolicy ParseRoutingPolicy(std::string_view name) {
  if (name == "uniform") return RoutingPolicy::kUniform;
  if (name == "ranking") return RoutingPolicy::kRanking;
  if (name == "uncertainty") return RoutingPolicy::kUncertainty;
  throw Error(ErrorCode::kParameter,
              "unknown routing policy '" + std::string(name) + "'");
}

QueryPlan PlanUniform(const AttitudeMatrix& matrix,
                      std::span<const ParticipantId> active, std::size_t budget,
                      std::uint64_t seed) {
  QueryPlan plan = EmptyPlan(RoutingPolicy::kUniform, seed);
  if (budget == 0) return plan;

  std::vector<QueryPair> pool;
  const std::size_t m = matrix.num_ideas();
  for (ParticipantId i : ActiveSubset(matrix, active)) {
    const auto row = matrix.Row(i);
    auto it = row.begin();
    for (std::size_t p = 0; p < m; ++p) {
      const IdeaId idea(static_cast<std::uint32_t>(p));
      if (it != row.end() && it->first == idea) {
        ++it;
        continue;
      }
      pool.push_back({i, idea});
    }
  }

  Rng rng = MakeRng(seed, {0x756e69666f726dULL});
  const std::size_t take = std::min(budget, pool.size());
  for (std::size_t t = 0; t < take; ++t) {
    const std::size_t j = t + UniformIndex(rng, pool.size() - t);
    std::swap(pool[t], pool[j]);
  }
  pool.resize(take);
  plan.pairs = std::move(pool);
  plan.shortfall = take < budget;
  return plan;
}

QueryPlan PlanRankingProportional(const AttitudeMatrix& matrix,
                                  const Ranking& ranking,
                                  std::span<const ParticipantId> active,
                                  std::size_t budget, std::uint64_t seed,
                                  RankWeighting weighting) {
  const std::size_t m = matrix.num_ideas();
  std::vector<bool> seen(m, false);
  for (IdeaId idea : ranking.order) {
    if (!matrix.HasIdea(idea) || seen[idea.index()]) {
      throw Error(ErrorCode::kParameter, "ranking is not a permutation of the ideas");
    }
    seen[idea.index()] = true;
  }
  if (ranking.order.size() != m) {
    throw Error(ErrorCode::kParameter, "ranking does not cover the current ideas");
  }
  if (!std::isfinite(weighting.exponent)) {
    throw Error(ErrorCode::kParameter, "rank weight exponent must be finite");
  }

  QueryPlan plan = EmptyPlan(RoutingPolicy::kRanking, seed);
  if (budget == 0) return plan;

  auto pools = UnknownByIdea(matrix, ActiveSubset(matrix, active));
  std::size_t live = 0;
  for (const auto& pool : pools) live += pool.empty() ? 0 : 1;

  std::vector<double> rank_weight(m);
  for (std::size_t r = 0; r < m; ++r) {
    rank_weight[r] = std::pow(static_cast<double>(r + 1), -weighting.exponent);
  }
  std::discrete_distribution<std::size_t> draw_rank(rank_weight.begin(),
                                                    rank_weight.end());
  Rng rng = MakeRng(seed, {0x72616e6bULL});

  while (plan.pairs.size() < budget && live > 0) {
    const IdeaId idea = ranking.order[draw_rank(rng)];
    auto& pool = pools[idea.index()];
    if (pool.empty()) continue;  // exhausted idea: redraw
    plan.pairs.push_back({TakeUniform(pool, rng), idea});
    if (pool.empty()) --live;
  }
  plan.shortfall = plan.pairs.size() < budget;
  return plan;
}

QueryPlan PlanUncertainty(const AttitudeMatrix& matrix,
                          std::span<const ParticipantId> active,
                          std::size_t budget, const ElicitationWeights& weights,
                          std::uint64_t seed) {
  weights.Validate();
  QueryPlan plan = EmptyPlan(RoutingPolicy::kUncertainty, seed);
  if (budget == 0) return plan;

  const std::size_t m = matrix.num_ideas();
  auto pools = UnknownByIdea(matrix, ActiveSubset(matrix, active));
  std::vector<double> planned(m, 0.0);
  Rng rng = MakeRng(seed, {0x756e63657274ULL});

  auto width = [&](std::size_t p) {
    const IdeaId idea(static_cast<std::uint32_t>(p));
    const auto responses = static_cast<double>(matrix.responses(idea));
    const double trials = responses + planned[p];
    if (trials == 0.0) return 1.0;
    const double rate = responses > 0.0
                            ? static_cast<double>(matrix.approvals(idea)) / responses
                            : weights.prior_mean;
    const Interval ci = WilsonInterval(rate * trials, trials);
    return ci.high - ci.low;
  };

  while (plan.pairs.size() < budget) {
    std::size_t best = m;
    double best_width = -1.0;
    for (std::size_t p = 0; p < m; ++p) {
      if (pools[p].empty()) continue;
      const double w = width(p);
      if (w > best_width) {
        best = p;
        best_width = w;
      }
    }
    if (best == m) break;
    plan.pairs.push_back(
        {TakeUniform(pools[best], rng), IdeaId(static_cast<std::uint32_t>(best))});
    planned[best] += 1.0;
  }
  plan.shortfall = plan.pairs.size() < budget;
  return plan;
}

QueryPlan Plan(RoutingPolicy policy, const AttitudeMatrix& matrix,
               std::span<const ParticipantId> active, std::size_t budget,
               const ElicitationWeights& weights, std::uint64_t seed) {
  switch (policy) {
    case RoutingPolicy::kUniform:
      return PlanUniform(matrix, active, budget, seed);
    case RoutingPolicy::kRanking: {
      if (matrix.num_ideas() == 0) {
        QueryPlan plan = EmptyPlan(policy, seed);
        plan.shortfall = budget > 0;
        return plan;
      }
      return PlanRankingProportional(matrix, ElicitationRanking(matrix, weights),
                                     active, budget, seed);
    }
    case RoutingPolicy::kUncertainty:
      return PlanUncertainty(matrix, active, budget, weights, seed);
  }
  throw Error(ErrorCode::kParameter, "unknown routing policy");
}

}  // namespace delib
