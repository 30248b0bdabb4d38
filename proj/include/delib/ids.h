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

#ifndef DELIB_IDS_H_
#define DELIB_IDS_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace delib {

// Dense index assigned in arrival order. Distinct tags keep participant and
// idea indices from being mixed up.
template <typename Tag>
class StrongIndex {
 public:
  constexpr StrongIndex() = default;
  constexpr explicit StrongIndex(std::uint32_t value) : value_(value) {}

  constexpr std::uint32_t value() const { return value_; }
  constexpr std::size_t index() const { return value_; }

  friend constexpr auto operator<=>(StrongIndex, StrongIndex) = default;

 private:
  std::uint32_t value_ = 0;
};

using ParticipantId = StrongIndex<struct ParticipantTag>;
using IdeaId = StrongIndex<struct IdeaTag>;

}  // namespace delib

template <typename Tag>
struct std::hash<delib::StrongIndex<Tag>> {
  std::size_t operator()(delib::StrongIndex<Tag> id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value());
  }
};

#endif  // DELIB_IDS_H_
