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

#ifndef DELIB_LANDSCAPE_H_
#define DELIB_LANDSCAPE_H_

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "delib/attitude_matrix.h"
#include "delib/dense_matrix.h"

namespace delib {

// Opinion landscape: imputation, principal-subspace embedding, k-means
// clustering, and an audit of how the clustering treats individuals.

// Dense view of an attitude matrix with every unknown cell filled in.
struct CompleteMatrix {
  DenseMatrix values;             // n x m, entries in [0, 1]
  std::vector<bool> imputed_mask;  // row-major n x m, true where imputed

  bool imputed(std::size_t i, std::size_t p) const {
    return imputed_mask[i * values.cols() + p];
  }
  std::size_t num_imputed() const;
};

// Unknown cells take their column's known-response mean; columns with no
// known response take 0.5.
CompleteMatrix ImputeMean(const AttitudeMatrix& matrix);
// Same rule applied to a complete matrix whose mask marks cells to refill.
// Leaves values unchanged when applied to ImputeMean output.
CompleteMatrix ImputeMean(const CompleteMatrix& complete);

struct PcaOptions {
  std::size_t dims = 2;
  double tolerance = 1e-9;
  std::size_t max_iterations = 10'000;
};

struct Embedding {
  DenseMatrix points;       // n x d projections of the centered rows
  DenseMatrix components;   // d x m orthonormal directions
  std::vector<double> column_means;
  std::vector<double> explained;  // squared norm captured per component
  double total_variance = 0.0;    // squared Frobenius norm after centering
  double objective = 0.0;         // sum_i |x_i - proj_S(x_i)|^2
  std::vector<std::size_t> iterations;  // power iterations per component
};

// Best-fit d-dimensional subspace through the column means, found by power
// iteration with deflation on the m x m scatter matrix. A component is
// accepted once |C v - (v'Cv) v| <= tolerance * max(1, trace C). Each
// component is signed so its largest-magnitude entry is positive (first such
// entry on ties). Throws kParameter unless 2 <= n and 1 <= d <= min(n, m);
// throws kNumerical, carrying the residual, if a component does not converge
// within max_iterations.
Embedding PrincipalSubspace(const DenseMatrix& rows, PcaOptions options = {});
Embedding PrincipalSubspace(const CompleteMatrix& complete, PcaOptions options = {});

// Sum of squared distances from each row of `rows` to its projection onto the
// affine subspace (means + span of components). Components need not come from
// PrincipalSubspace but must be orthonormal.
double SubspaceResidual(const DenseMatrix& rows, const std::vector<double>& means,
                        const DenseMatrix& components);

struct Clustering {
  std::vector<std::size_t> assignment;  // cluster index in [0, k) per point
  DenseMatrix centroids;                // k x dim
  double objective = 0.0;               // within-cluster sum of squares
  // Objective after each Lloyd update, first entry from the seeded start.
  std::vector<double> objective_trace;
  std::size_t iterations = 0;
};

struct KMeansOptions {
  std::size_t max_iterations = 500;
};

// k-means++ seeding, then Lloyd iterations until the assignment is a fixpoint
// or max_iterations is hit. A point changes cluster only for a strictly closer
// centroid (ties to the lowest index on first assignment). An emptied cluster
// takes the point farthest from its centroid among clusters of size >= 2.
// Deterministic in (points, k, seed). Throws kParameter unless 1 <= k <= n.
Clustering KMeans(const DenseMatrix& points, std::size_t k, std::uint64_t seed,
                  KMeansOptions options = {});

double ClusteringObjective(const DenseMatrix& points,
                           const std::vector<std::size_t>& assignment,
                           const DenseMatrix& centroids);

struct BlockingCoalition {
  std::size_t candidate;             // index of the data point used as center
  std::vector<std::size_t> members;  // ascending
};

struct FairnessAudit {
  std::vector<double> centroid_distance;
  // +infinity when there is no other centroid.
  std::vector<double> nearest_other_distance;
  // ceil(n / k): the size at which a group is entitled to its own center.
  std::size_t coalition_threshold = 0;
  // For each candidate center (every data point), the set of points strictly
  // closer to it than to their own centroid, reported when it reaches the
  // threshold. Identical member sets are reported once, at the lowest
  // candidate.
  std::vector<BlockingCoalition> blocking_coalitions;
};

// Works for any centroid placement, not only k-means output.
FairnessAudit AuditClustering(const Clustering& clustering,
                              const DenseMatrix& points);

enum class ClusterSpace { kEmbedded, kFull };

std::string_view ClusterSpaceName(ClusterSpace space);
// Accepts "embedded" and "full"; throws kParameter otherwise.
ClusterSpace ParseClusterSpace(std::string_view name);

struct LandscapeOptions {
  std::size_t k = 2;
  std::uint64_t seed = 0;
  ClusterSpace space = ClusterSpace::kEmbedded;
  // Capped at min(n, m).
  std::size_t dims = 2;
};

struct Landscape {
  CompleteMatrix complete;
  Embedding embedding;
  Clustering clustering;
  FairnessAudit audit;
};

// ImputeMean, PrincipalSubspace, KMeans, AuditClustering in sequence.
// Clustering and audit run on the embedded points or on the imputed rows
// depending on options.space. Throws kParameter unless n >= 2, m >= 1 and
// k <= n.
Landscape BuildLandscape(const AttitudeMatrix& matrix, const LandscapeOptions& options);

}  // namespace delib

#endif  // DELIB_LANDSCAPE_H_
