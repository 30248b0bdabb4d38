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

#ifndef DELIB_KERNELS_KERNELS_H_
#define DELIB_KERNELS_KERNELS_H_

#include <cstddef>
#include <span>
#include <string_view>

// Arithmetic inner loops shared by slate scoring, PCA and k-means.
//
// Each kernel has a scalar reference in delib::kernels::scalar and, on x86-64,
// an AVX2+FMA variant in delib::kernels::avx2. The unqualified entry points
// dispatch through a table chosen once at startup from CPUID; setting
// DELIB_FORCE_SCALAR=1 in the environment pins the scalar table. Variants
// agree to rounding, not bitwise: the SIMD reductions sum in a different
// order. Within one process the choice is fixed, so results are reproducible
// run to run on the same machine.

namespace delib::kernels {

enum class Isa { kScalar, kAvx2 };

std::string_view IsaName(Isa isa);

// The instruction set currently used by the dispatching entry points.
Isa ActiveIsa();
bool IsaSupported(Isa isa);
// Switches the dispatch table. Returns false (and changes nothing) if `isa`
// is not supported on this CPU. Not safe to call concurrently with kernels.
bool SetActiveIsa(Isa isa);

// sum_i a[i] * b[i]. Spans must have equal length.
double Dot(std::span<const double> a, std::span<const double> b);
// y += alpha * x.
void Axpy(double alpha, std::span<const double> x, std::span<double> y);
// sum_i (a[i] - b[i])^2.
double SquaredDistance(std::span<const double> a, std::span<const double> b);
// y = M x for a row-major rows x cols matrix.
void MatVec(std::span<const double> matrix, std::size_t rows, std::size_t cols,
            std::span<const double> x, std::span<double> y);

struct KernelTable {
  double (*dot)(const double*, const double*, std::size_t);
  void (*axpy)(double, const double*, double*, std::size_t);
  double (*squared_distance)(const double*, const double*, std::size_t);
  void (*mat_vec)(const double*, std::size_t, std::size_t, const double*,
                  double*);
};

namespace scalar {
double Dot(const double* a, const double* b, std::size_t n);
void Axpy(double alpha, const double* x, double* y, std::size_t n);
double SquaredDistance(const double* a, const double* b, std::size_t n);
void MatVec(const double* m, std::size_t rows, std::size_t cols,
            const double* x, double* y);
}  // namespace scalar

namespace avx2 {
// Only callable when IsaSupported(Isa::kAvx2).
double Dot(const double* a, const double* b, std::size_t n);
void Axpy(double alpha, const double* x, double* y, std::size_t n);
double SquaredDistance(const double* a, const double* b, std::size_t n);
void MatVec(const double* m, std::size_t rows, std::size_t cols,
            const double* x, double* y);
}  // namespace avx2

}  // namespace delib::kernels

#endif  // DELIB_KERNELS_KERNELS_H_
