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

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "delib/error.h"
#include "delib/loop.h"

namespace delib {

const std::vector<std::string_view>& MetricNames() {
  static const std::vector<std::string_view> names = {
      "completion_rate",       "estimated_slate_score", "estimated_slate_true_score",
      "oracle_slate_score",    "slate_coverage",        "slate_distance",
      "ranking_displacement",  "support_mae",           "cluster_recovery",
      "exposure_gini",         "queries_served",
  };
  return names;
}

std::vector<std::optional<double>> MetricValues(const RoundMetrics& r) {
  return {
      r.completion_rate,      r.estimated_slate_score, r.estimated_slate_true_score,
      r.oracle_slate_score,   r.slate_coverage,        r.slate_distance,
      r.ranking_displacement, r.support_mae,           r.cluster_recovery,
      r.exposure_gini,        static_cast<double>(r.queries_served),
  };
}

double GiniCoefficient(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n == 0) return 0.0;
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  double total = 0.0;
  double weighted = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    total += sorted[i];
    weighted += static_cast<double>(i + 1) * sorted[i];
  }
  if (total <= 0.0) return 0.0;
  // G = sum_i sum_j |x_i - x_j| / (2 n^2 mean), in sorted form.
  const auto nd = static_cast<double>(n);
  return (2.0 * weighted) / (nd * total) - (nd + 1.0) / nd;
}

double MatchingAccuracy(std::span<const std::size_t> clusters,
                        std::span<const std::size_t> labels) {
  if (clusters.size() != labels.size()) {
    throw Error(ErrorCode::kParameter, "cluster and label counts differ");
  }
  if (clusters.empty()) return 0.0;
  const std::size_t k = *std::max_element(clusters.begin(), clusters.end()) + 1;
  const std::size_t l = *std::max_element(labels.begin(), labels.end()) + 1;
  if (l > 16) throw Error(ErrorCode::kParameter, "too many labels to match");

  std::vector<std::vector<std::size_t>> confusion(k, std::vector<std::size_t>(l, 0));
  for (std::size_t i = 0; i < clusters.size(); ++i) ++confusion[clusters[i]][labels[i]];

  // best[mask]: most matched items using the labels in mask, over the
  // clusters processed so far; each cluster takes at most one unused label.
  const std::size_t states = std::size_t{1} << l;
  std::vector<long> best(states, -1);
  best[0] = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<long> next = best;
    for (std::size_t mask = 0; mask < states; ++mask) {
      if (best[mask] < 0) continue;
      for (std::size_t lab = 0; lab < l; ++lab) {
        if (mask & (std::size_t{1} << lab)) continue;
        const std::size_t to = mask | (std::size_t{1} << lab);
        next[to] = std::max(next[to], best[mask] + static_cast<long>(confusion[c][lab]));
      }
    }
    best = std::move(next);
  }
  const long matched = *std::max_element(best.begin(), best.end());
  return static_cast<double>(matched) / static_cast<double>(clusters.size());
}

double RankDisplacement(std::span<const IdeaId> a, std::span<const IdeaId> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::kParameter, "rankings differ in length");
  if (a.empty()) return 0.0;
  std::vector<long> pos(a.size(), -1);
  for (std::size_t t = 0; t < b.size(); ++t) {
    if (b[t].index() >= pos.size()) throw Error(ErrorCode::kParameter, "ranking ids differ");
    pos[b[t].index()] = static_cast<long>(t);
  }
  double total = 0.0;
  for (std::size_t t = 0; t < a.size(); ++t) {
    if (a[t].index() >= pos.size() || pos[a[t].index()] < 0) {
      throw Error(ErrorCode::kParameter, "ranking ids differ");
    }
    total += static_cast<double>(std::labs(pos[a[t].index()] - static_cast<long>(t)));
  }
  return total / static_cast<double>(a.size());
}

}  // namespace delib
