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

#include <cmath>
#include <limits>
#include <set>

#include "delib/error.h"
#include "delib/kernels/kernels.h"
#include "delib/landscape.h"

namespace delib {

FairnessAudit AuditClustering(const Clustering& clustering,
                              const DenseMatrix& points) {
  const std::size_t n = points.rows();
  const std::size_t k = clustering.centroids.rows();
  if (clustering.assignment.size() != n || k == 0 ||
      clustering.centroids.cols() != points.cols()) {
    throw Error(ErrorCode::kParameter, "clustering does not match the points");
  }

  FairnessAudit audit;
  audit.coalition_threshold = (n + k - 1) / k;
  audit.centroid_distance.resize(n);
  audit.nearest_other_distance.resize(n);
  std::vector<double> own_d2(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t a = clustering.assignment[i];
    if (a >= k) throw Error(ErrorCode::kParameter, "assignment outside [0, k)");
    double other = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < k; ++j) {
      const double d2 = kernels::SquaredDistance(points.Row(i), clustering.centroids.Row(j));
      if (j == a) {
        own_d2[i] = d2;
      } else {
        other = std::min(other, d2);
      }
    }
    audit.centroid_distance[i] = std::sqrt(own_d2[i]);
    audit.nearest_other_distance[i] = std::sqrt(other);
  }

  std::set<std::vector<std::size_t>> reported;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i) {
      if (kernels::SquaredDistance(points.Row(i), points.Row(c)) < own_d2[i]) {
        members.push_back(i);
      }
    }
    if (members.size() < audit.coalition_threshold) continue;
    if (!reported.insert(members).second) continue;
    audit.blocking_coalitions.push_back({c, std::move(members)});
  }
  return audit;
}

}  // namespace delib
