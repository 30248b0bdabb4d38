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

#include "delib/kernels/kernels.h"

#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

namespace delib::kernels {
namespace {

std::vector<double> RandomVector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> v(n);
  for (double& x : v) x = u(rng);
  return v;
}

// Tolerance for sums of n terms of magnitude <= 1 evaluated in a different order.
double SumTolerance(std::size_t n) { return 1e-14 * static_cast<double>(n + 1); }

TEST(ScalarKernels, MatchNaiveLoops) {
  const std::vector<double> a = {1, 2, 3};
  const std::vector<double> b = {4, -5, 6};
  EXPECT_DOUBLE_EQ(scalar::Dot(a.data(), b.data(), 3), 12.0);
  EXPECT_DOUBLE_EQ(scalar::SquaredDistance(a.data(), b.data(), 3), 9.0 + 49.0 + 9.0);
  std::vector<double> y = b;
  scalar::Axpy(2.0, a.data(), y.data(), 3);
  EXPECT_EQ(y, (std::vector<double>{6, -1, 12}));
  const std::vector<double> m = {1, 0, 2, 0, 1, 0};  // 2 x 3
  std::vector<double> out(2);
  scalar::MatVec(m.data(), 2, 3, a.data(), out.data());
  EXPECT_EQ(out, (std::vector<double>{7, 2}));
}

TEST(ScalarKernels, EmptyInputs) {
  EXPECT_EQ(scalar::Dot(nullptr, nullptr, 0), 0.0);
  EXPECT_EQ(scalar::SquaredDistance(nullptr, nullptr, 0), 0.0);
}

#if defined(DELIB_HAVE_AVX2_KERNELS)

class Avx2Equivalence : public ::testing::Test {
 protected:
  void SetUp() override {
    if (!IsaSupported(Isa::kAvx2)) GTEST_SKIP() << "CPU lacks AVX2+FMA";
  }
};

// Lengths cover empty input, every tail length and several full blocks.
TEST_F(Avx2Equivalence, DotAndDistanceAllTails) {
  std::mt19937_64 rng(7);
  for (std::size_t n = 0; n <= 70; ++n) {
    for (int rep = 0; rep < 5; ++rep) {
      const auto a = RandomVector(rng, n);
      const auto b = RandomVector(rng, n);
      EXPECT_NEAR(avx2::Dot(a.data(), b.data(), n), scalar::Dot(a.data(), b.data(), n),
                  SumTolerance(n))
          << "n=" << n;
      EXPECT_NEAR(avx2::SquaredDistance(a.data(), b.data(), n),
                  scalar::SquaredDistance(a.data(), b.data(), n), 4 * SumTolerance(n))
          << "n=" << n;
    }
  }
}

TEST_F(Avx2Equivalence, AxpyAllTails) {
  std::mt19937_64 rng(11);
  for (std::size_t n = 0; n <= 70; ++n) {
    const auto x = RandomVector(rng, n);
    const auto y0 = RandomVector(rng, n);
    auto ys = y0;
    auto yv = y0;
    scalar::Axpy(0.37, x.data(), ys.data(), n);
    avx2::Axpy(0.37, x.data(), yv.data(), n);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(yv[i], ys[i], 1e-15) << "n=" << n;
  }
}

TEST_F(Avx2Equivalence, MatVecShapes) {
  std::mt19937_64 rng(13);
  for (std::size_t rows : {1u, 3u, 8u, 17u}) {
    for (std::size_t cols = 0; cols <= 19; ++cols) {
      const auto m = RandomVector(rng, rows * cols);
      const auto x = RandomVector(rng, cols);
      std::vector<double> ys(rows, 99.0);
      std::vector<double> yv(rows, -99.0);
      scalar::MatVec(m.data(), rows, cols, x.data(), ys.data());
      avx2::MatVec(m.data(), rows, cols, x.data(), yv.data());
      for (std::size_t r = 0; r < rows; ++r) EXPECT_NEAR(yv[r], ys[r], SumTolerance(cols));
    }
  }
}

TEST_F(Avx2Equivalence, UnalignedSpans) {
  std::mt19937_64 rng(17);
  const auto a = RandomVector(rng, 40);
  const auto b = RandomVector(rng, 40);
  for (std::size_t offset = 0; offset < 4; ++offset) {
    const std::size_t n = 40 - offset;
    EXPECT_NEAR(avx2::Dot(a.data() + offset, b.data() + offset, n),
                scalar::Dot(a.data() + offset, b.data() + offset, n), SumTolerance(n));
  }
}

TEST_F(Avx2Equivalence, DispatchSwitchesTables) {
  const Isa original = ActiveIsa();
  std::mt19937_64 rng(19);
  const auto a = RandomVector(rng, 33);
  const auto b = RandomVector(rng, 33);
  ASSERT_TRUE(SetActiveIsa(Isa::kScalar));
  EXPECT_EQ(ActiveIsa(), Isa::kScalar);
  const double s = Dot(a, b);
  EXPECT_EQ(s, scalar::Dot(a.data(), b.data(), 33));
  ASSERT_TRUE(SetActiveIsa(Isa::kAvx2));
  EXPECT_EQ(Dot(a, b), avx2::Dot(a.data(), b.data(), 33));
  EXPECT_NEAR(Dot(a, b), s, SumTolerance(33));
  SetActiveIsa(original);
}

#endif  // DELIB_HAVE_AVX2_KERNELS

TEST(Dispatch, ScalarAlwaysSupported) {
  EXPECT_TRUE(IsaSupported(Isa::kScalar));
  EXPECT_EQ(IsaName(Isa::kScalar), "scalar");
  EXPECT_EQ(IsaName(Isa::kAvx2), "avx2");
}

}  // namespace
}  // namespace delib::kernels
