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
#include <string>

#include <fmt/format.h>

#include "delib/error.h"
#include "delib/kernels/kernels.h"
#include "delib/landscape.h"
#include "delib/random.h"

namespace delib {

namespace {

double Norm(std::span<const double> v) { return std::sqrt(kernels::Dot(v, v)); }

// Removes the components of v along the first `count` rows of `basis`.
void Orthogonalize(std::span<double> v, const DenseMatrix& basis, std::size_t count) {
  for (std::size_t j = 0; j < count; ++j) {
    kernels::Axpy(-kernels::Dot(basis.Row(j), v), basis.Row(j), v);
  }
}

// Deterministic start vector for component j, orthonormal to earlier ones.
std::vector<double> StartVector(std::size_t m, std::size_t j,
                                const DenseMatrix& basis) {
  Rng rng = MakeRng(0x70636100ULL, {j});
  std::vector<double> v(m);
  for (double& x : v) x = 2.0 * UniformUnit(rng) - 1.0;
  Orthogonalize(v, basis, j);
  double norm = Norm(v);
  // A random draw that falls (numerically) in the span of earlier components
  // is replaced by the first coordinate axis that does not.
  for (std::size_t axis = 0; norm < 1e-8 && axis < m; ++axis) {
    std::fill(v.begin(), v.end(), 0.0);
    v[axis] = 1.0;
    Orthogonalize(v, basis, j);
    norm = Norm(v);
  }
  for (double& x : v) x /= norm;
  return v;
}

void FixSign(std::span<double> v) {
  std::size_t arg = 0;
  for (std::size_t t = 1; t < v.size(); ++t) {
    if (std::abs(v[t]) > std::abs(v[arg])) arg = t;
  }
  if (v[arg] < 0.0) {
    for (double& x : v) x = -x;
  }
}

}  // namespace

double SubspaceResidual(const DenseMatrix& rows, const std::vector<double>& means,
                        const DenseMatrix& components) {
  const std::size_t m = rows.cols();
  std::vector<double> r(m);
  double total = 0.0;
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    const auto x = rows.Row(i);
    for (std::size_t t = 0; t < m; ++t) r[t] = x[t] - means[t];
    Orthogonalize(r, components, components.rows());
    total += kernels::Dot(r, r);
  }
  return total;
}

Embedding PrincipalSubspace(const DenseMatrix& rows, PcaOptions options) {
  const std::size_t n = rows.rows();
  const std::size_t m = rows.cols();
  const std::size_t d = options.dims;
  if (n < 2) throw Error(ErrorCode::kParameter, "PCA needs at least two rows");
  if (d == 0 || d > std::min(n, m)) {
    throw Error(ErrorCode::kParameter,
                fmt::format("PCA dimension {} outside [1, min(n={}, m={})]", d, n, m));
  }

  Embedding e;
  e.column_means.assign(m, 0.0);
  for (std::size_t i = 0; i < n; ++i) kernels::Axpy(1.0, rows.Row(i), e.column_means);
  for (double& mu : e.column_means) mu /= static_cast<double>(n);

  DenseMatrix centered = rows;
  for (std::size_t i = 0; i < n; ++i) kernels::Axpy(-1.0, e.column_means, centered.Row(i));

  // Scatter matrix C = X'X, accumulated row by row.
  DenseMatrix scatter(m, m);
  for (std::size_t i = 0; i < n; ++i) {
    const auto x = centered.Row(i);
    for (std::size_t t = 0; t < m; ++t) {
      if (x[t] != 0.0) kernels::Axpy(x[t], x, scatter.Row(t));
    }
  }
  e.total_variance = 0.0;
  for (std::size_t t = 0; t < m; ++t) e.total_variance += scatter(t, t);

  const double scale = std::max(1.0, e.total_variance);
  DenseMatrix deflated = scatter;
  e.components = DenseMatrix(d, m);
  std::vector<double> w(m);
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<double> v = StartVector(m, j, e.components);
    double residual = 0.0;
    bool converged = false;
    std::size_t it = 0;
    while (it < options.max_iterations) {
      ++it;
      kernels::MatVec(deflated.data(), m, m, v, w);
      Orthogonalize(w, e.components, j);
      const double lambda = kernels::Dot(v, w);
      std::vector<double> r = w;
      kernels::Axpy(-lambda, v, r);
      residual = Norm(r);
      if (residual <= options.tolerance * scale) {
        converged = true;
        break;
      }
      const double norm = Norm(w);
      for (std::size_t t = 0; t < m; ++t) v[t] = w[t] / norm;
    }
    if (!converged) {
      throw Error(ErrorCode::kNumerical,
                  fmt::format("power iteration for component {} did not converge "
                              "in {} iterations (residual {:.3e})",
                              j + 1, options.max_iterations, residual));
    }
    FixSign(v);
    std::copy(v.begin(), v.end(), e.components.Row(j).begin());
    e.iterations.push_back(it);

    // Hotelling deflation: C <- C - lambda v v'.
    kernels::MatVec(deflated.data(), m, m, v, w);
    const double lambda = kernels::Dot(v, w);
    for (std::size_t t = 0; t < m; ++t) {
      kernels::Axpy(-lambda * v[t], v, deflated.Row(t));
    }
  }

  e.points = DenseMatrix(n, d);
  e.explained.assign(d, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const double y = kernels::Dot(centered.Row(i), e.components.Row(j));
      e.points(i, j) = y;
      e.explained[j] += y * y;
    }
  }
  e.objective = SubspaceResidual(rows, e.column_means, e.components);
  return e;
}

Embedding PrincipalSubspace(const CompleteMatrix& complete, PcaOptions options) {
  return PrincipalSubspace(complete.values, options);
}

}  // namespace delib
