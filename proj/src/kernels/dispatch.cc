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

#include <atomic>
#include <cassert>
#include <cstdlib>
#include <cstring>

#include "delib/kernels/kernels.h"

namespace delib::kernels {

namespace {

constexpr KernelTable kScalarTable = {
    &scalar::Dot,
    &scalar::Axpy,
    &scalar::SquaredDistance,
    &scalar::MatVec,
};

#if defined(DELIB_HAVE_AVX2_KERNELS)
constexpr KernelTable kAvx2Table = {
    &avx2::Dot,
    &avx2::Axpy,
    &avx2::SquaredDistance,
    &avx2::MatVec,
};
#endif

bool CpuHasAvx2() {
#if defined(DELIB_HAVE_AVX2_KERNELS)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

bool ForcedScalar() {
  const char* v = std::getenv("DELIB_FORCE_SCALAR");
  return v != nullptr && std::strcmp(v, "") != 0 && std::strcmp(v, "0") != 0;
}

const KernelTable* SelectTable(Isa isa) {
#if defined(DELIB_HAVE_AVX2_KERNELS)
  if (isa == Isa::kAvx2) return &kAvx2Table;
#endif
  (void)isa;
  return &kScalarTable;
}

Isa DetectIsa() {
  if (!ForcedScalar() && CpuHasAvx2()) return Isa::kAvx2;
  return Isa::kScalar;
}

struct State {
  std::atomic<Isa> isa;
  std::atomic<const KernelTable*> table;
  State() : isa(DetectIsa()), table(SelectTable(isa.load())) {}
};

State& GetState() {
  static State state;
  return state;
}

const KernelTable& Table() {
  return *GetState().table.load(std::memory_order_relaxed);
}

}  // namespace

std::string_view IsaName(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

Isa ActiveIsa() { return GetState().isa.load(); }

bool IsaSupported(Isa isa) {
  if (isa == Isa::kScalar) return true;
  static const bool avx2 = CpuHasAvx2();
  return avx2;
}

bool SetActiveIsa(Isa isa) {
  if (!IsaSupported(isa)) return false;
  State& s = GetState();
  s.isa.store(isa);
  s.table.store(SelectTable(isa));
  return true;
}

double Dot(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  return Table().dot(a.data(), b.data(), a.size());
}

void Axpy(double alpha, std::span<const double> x, std::span<double> y) {
  assert(x.size() == y.size());
  Table().axpy(alpha, x.data(), y.data(), x.size());
}

double SquaredDistance(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  return Table().squared_distance(a.data(), b.data(), a.size());
}

void MatVec(std::span<const double> matrix, std::size_t rows, std::size_t cols,
            std::span<const double> x, std::span<double> y) {
  assert(matrix.size() == rows * cols && x.size() == cols && y.size() == rows);
  Table().mat_vec(matrix.data(), rows, cols, x.data(), y.data());
}

}  // namespace delib::kernels
