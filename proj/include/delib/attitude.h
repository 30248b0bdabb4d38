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

#ifndef DELIB_ATTITUDE_H_
#define DELIB_ATTITUDE_H_

#include <cstdint>
#include <optional>
#include <string_view>

namespace delib {

// Ternary attitude domain: approve (1), disapprove (0), unknown.
enum class Attitude : std::uint8_t {
  kUnknown = 0,
  kApprove = 1,
  kDisapprove = 2,
};

inline bool IsKnown(Attitude a) { return a != Attitude::kUnknown; }

// 1 for approve, 0 for disapprove, nullopt for unknown.
inline std::optional<double> NumericValue(Attitude a) {
  switch (a) {
    case Attitude::kApprove:
      return 1.0;
    case Attitude::kDisapprove:
      return 0.0;
    case Attitude::kUnknown:
      break;
  }
  return std::nullopt;
}

inline std::string_view AttitudeName(Attitude a) {
  switch (a) {
    case Attitude::kApprove:
      return "approve";
    case Attitude::kDisapprove:
      return "disapprove";
    case Attitude::kUnknown:
      break;
  }
  return "unknown";
}

}  // namespace delib

#endif  // DELIB_ATTITUDE_H_
