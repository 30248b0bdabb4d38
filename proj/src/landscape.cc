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

#include "delib/landscape.h"

#include <algorithm>
#include <string>

#include <fmt/format.h>

#include "delib/error.h"

namespace delib {

std::string_view ClusterSpaceName(ClusterSpace space) {
  return space == ClusterSpace::kEmbedded ? "embedded" : "full";
}

ClusterSpace ParseClusterSpace(std::string_view name) {
  if (name == "embedded") return ClusterSpace::kEmbedded;
  if (name == "full") return ClusterSpace::kFull;
  throw Error(ErrorCode::kParameter, "unknown clustering space '" + std::string(name) + "'");
}

Landscape BuildLandscape(const AttitudeMatrix& matrix, const LandscapeOptions& options) {
  const std::size_t n = matrix.num_participants();
  const std::size_t m = matrix.num_ideas();
  if (n < 2 || m < 1 || options.k == 0 || options.k > n) {
    throw Error(ErrorCode::kParameter,
                fmt::format("landscape needs n >= 2, m >= 1, 1 <= k <= n "
                            "(n={}, m={}, k={})",
                            n, m, options.k));
  }

  Landscape out;
  out.complete = ImputeMean(matrix);
  PcaOptions pca;
  pca.dims = std::min({options.dims, n, m});
  out.embedding = PrincipalSubspace(out.complete, pca);
  const DenseMatrix& space = options.space == ClusterSpace::kEmbedded
                                 ? out.embedding.points
                                 : out.complete.values;
  out.clustering = KMeans(space, options.k, options.seed);
  out.audit = AuditClustering(out.clustering, space);
  return out;
}

}  // namespace delib
