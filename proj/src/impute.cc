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

#include "delib/landscape.h"

namespace delib {

namespace {

// Neutral value for a column nobody has answered.
constexpr double kNoInformation = 0.5;

}  // namespace

std::size_t CompleteMatrix::num_imputed() const {
  return static_cast<std::size_t>(
      std::count(imputed_mask.begin(), imputed_mask.end(), true));
}

CompleteMatrix ImputeMean(const AttitudeMatrix& matrix) {
  const std::size_t n = matrix.num_participants();
  const std::size_t m = matrix.num_ideas();
  CompleteMatrix out{DenseMatrix(n, m), std::vector<bool>(n * m, true)};

  std::vector<double> fill(m, kNoInformation);
  for (std::size_t p = 0; p < m; ++p) {
    const auto mean = matrix.ColumnMean(IdeaId(static_cast<std::uint32_t>(p)));
    if (mean) fill[p] = *mean;
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto row = out.values.Row(i);
    std::copy(fill.begin(), fill.end(), row.begin());
    for (const auto& [idea, value] : matrix.Row(ParticipantId(static_cast<std::uint32_t>(i)))) {
      row[idea.index()] = *NumericValue(value);
      out.imputed_mask[i * m + idea.index()] = false;
    }
  }
  return out;
}

CompleteMatrix ImputeMean(const CompleteMatrix& complete) {
  const std::size_t n = complete.values.rows();
  const std::size_t m = complete.values.cols();
  std::vector<double> sum(m, 0.0);
  std::vector<std::size_t> count(m, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t p = 0; p < m; ++p) {
      if (complete.imputed(i, p)) continue;
      sum[p] += complete.values(i, p);
      ++count[p];
    }
  }
  CompleteMatrix out = complete;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t p = 0; p < m; ++p) {
      if (!complete.imputed(i, p)) continue;
      out.values(i, p) =
          count[p] > 0 ? sum[p] / static_cast<double>(count[p]) : kNoInformation;
    }
  }
  return out;
}

}  // namespace delib
