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

#ifndef DELIB_RANDOM_H_
#define DELIB_RANDOM_H_

#include <cstdint>
#include <initializer_list>
#include <random>

namespace delib {

using Rng = std::mt19937_64;

// SplitMix64 finalizer.
constexpr std::uint64_t MixBits(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent stream for (seed, keys...). Used wherever a result must be a
// pure function of a seed and a position (round, participant, idea, ...).
inline Rng MakeRng(std::uint64_t seed, std::initializer_list<std::uint64_t> keys = {}) {
  std::uint64_t state = MixBits(seed);
  for (std::uint64_t key : keys) state = MixBits(state ^ MixBits(key));
  return Rng(state);
}

// Uniform index in [0, n). n must be positive.
inline std::size_t UniformIndex(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

inline double UniformUnit(Rng& rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

}  // namespace delib

#endif  // DELIB_RANDOM_H_
