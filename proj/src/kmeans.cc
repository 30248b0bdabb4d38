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
#include <limits>

#include <fmt/format.h>

#include "delib/error.h"
#include "delib/kernels/kernels.h"
#include "delib/landscape.h"
#include "delib/random.h"

namespace delib {

namespace {

std::vector<std::size_t> SeedCenters(const DenseMatrix& points, std::size_t k,
                                     std::uint64_t seed) {
  const std::size_t n = points.rows();
  Rng rng = MakeRng(seed, {0x6b6d65616e73ULL});
  std::vector<std::size_t> centers{UniformIndex(rng, n)};
  std::vector<bool> is_center(n, false);
  is_center[centers[0]] = true;

  std::vector<double> d2(n);
  for (std::size_t i = 0; i < n; ++i) {
    d2[i] = kernels::SquaredDistance(points.Row(i), points.Row(centers[0]));
  }
  while (centers.size() < k) {
    double total = 0.0;
    for (double x : d2) total += x;
    std::size_t next = n;
    if (total > 0.0) {
      const double target = UniformUnit(rng) * total;
      double cumulative = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (d2[i] <= 0.0) continue;
        cumulative += d2[i];
        next = i;
        if (cumulative > target) break;
      }
    } else {
      // Every point coincides with a center: take the first unused index.
      for (std::size_t i = 0; i < n && next == n; ++i) {
        if (!is_center[i]) next = i;
      }
    }
    centers.push_back(next);
    is_center[next] = true;
    for (std::size_t i = 0; i < n; ++i) {
      d2[i] = std::min(d2[i], kernels::SquaredDistance(points.Row(i), points.Row(next)));
    }
  }
  return centers;
}

std::size_t Nearest(std::span<const double> x, const DenseMatrix& centroids) {
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < centroids.rows(); ++j) {
    const double d = kernels::SquaredDistance(x, centroids.Row(j));
    if (d < best_d) {
      best = j;
      best_d = d;
    }
  }
  return best;
}

void UpdateCentroid(const DenseMatrix& points, const std::vector<std::size_t>& assignment,
                    std::size_t cluster, DenseMatrix& centroids) {
  auto c = centroids.Row(cluster);
  std::fill(c.begin(), c.end(), 0.0);
  std::size_t size = 0;
  for (std::size_t i = 0; i < points.rows(); ++i) {
    if (assignment[i] != cluster) continue;
    kernels::Axpy(1.0, points.Row(i), c);
    ++size;
  }
  if (size == 0) return;
  for (double& x : c) x /= static_cast<double>(size);
}

// Recomputes all centroids and refills clusters left empty.
void UpdateCentroids(const DenseMatrix& points, std::vector<std::size_t>& assignment,
                     DenseMatrix& centroids) {
  const std::size_t k = centroids.rows();
  std::vector<std::size_t> sizes(k, 0);
  for (std::size_t a : assignment) ++sizes[a];
  for (std::size_t j = 0; j < k; ++j) UpdateCentroid(points, assignment, j, centroids);

  for (std::size_t j = 0; j < k; ++j) {
    if (sizes[j] > 0) continue;
    std::size_t farthest = points.rows();
    double far_d = -1.0;
    for (std::size_t i = 0; i < points.rows(); ++i) {
      if (sizes[assignment[i]] < 2) continue;
      const double d = kernels::SquaredDistance(points.Row(i), centroids.Row(assignment[i]));
      if (d > far_d) {
        farthest = i;
        far_d = d;
      }
    }
    const std::size_t from = assignment[farthest];
    assignment[farthest] = j;
    --sizes[from];
    ++sizes[j];
    UpdateCentroid(points, assignment, from, centroids);
    UpdateCentroid(points, assignment, j, centroids);
  }
}

}  // namespace

double ClusteringObjective(const DenseMatrix& points,
                           const std::vector<std::size_t>& assignment,
                           const DenseMatrix& centroids) {
  double total = 0.0;
  for (std::size_t i = 0; i < points.rows(); ++i) {
    total += kernels::SquaredDistance(points.Row(i), centroids.Row(assignment[i]));
  }
  return total;
}

Clustering KMeans(const DenseMatrix& points, std::size_t k, std::uint64_t seed,
                  KMeansOptions options) {
  const std::size_t n = points.rows();
  if (k == 0 || k > n) {
    throw Error(ErrorCode::kParameter,
                fmt::format("k-means needs 1 <= k <= n, got k={} n={}", k, n));
  }

  Clustering c;
  c.centroids = DenseMatrix(k, points.cols());
  const auto seeds = SeedCenters(points, k, seed);
  for (std::size_t j = 0; j < k; ++j) {
    std::copy_n(points.Row(seeds[j]).begin(), points.cols(), c.centroids.Row(j).begin());
  }
  c.assignment.resize(n);
  for (std::size_t i = 0; i < n; ++i) c.assignment[i] = Nearest(points.Row(i), c.centroids);

  while (true) {
    UpdateCentroids(points, c.assignment, c.centroids);
    c.objective = ClusteringObjective(points, c.assignment, c.centroids);
    c.objective_trace.push_back(c.objective);
    ++c.iterations;
    if (c.iterations >= options.max_iterations) break;

    bool changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      const auto x = points.Row(i);
      std::size_t best = c.assignment[i];
      double best_d = kernels::SquaredDistance(x, c.centroids.Row(best));
      for (std::size_t j = 0; j < k; ++j) {
        const double d = kernels::SquaredDistance(x, c.centroids.Row(j));
        if (d < best_d) {
          best = j;
          best_d = d;
        }
      }
      if (best != c.assignment[i]) {
        c.assignment[i] = best;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return c;
}

}  // namespace delib
