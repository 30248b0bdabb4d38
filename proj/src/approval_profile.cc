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

#include "delib/approval_profile.h"

#include <algorithm>
#include <string>

#include "delib/error.h"

namespace delib {

ApprovalProfile ApprovalProfile::FromMatrix(const AttitudeMatrix& matrix,
                                            ProfileOptions options) {
  const std::size_t m = matrix.num_ideas();
  std::vector<bool> majority(m, false);
  if (options.unknowns == UnknownHandling::kImputeColumnMajority) {
    for (std::size_t p = 0; p < m; ++p) {
      const auto mean = matrix.ColumnMean(IdeaId(static_cast<std::uint32_t>(p)));
      majority[p] = mean.has_value() && *mean > 0.5;
    }
  }

  ApprovalProfile profile;
  profile.num_ideas_ = m;
  for (std::size_t i = 0; i < matrix.num_participants(); ++i) {
    const ParticipantId id(static_cast<std::uint32_t>(i));
    if (options.active_only && !matrix.IsActive(id)) continue;
    std::vector<IdeaId> approved;
    if (options.unknowns == UnknownHandling::kNonApproval) {
      for (const auto& [idea, value] : matrix.Row(id)) {
        if (value == Attitude::kApprove) approved.push_back(idea);
      }
    } else {
      const auto row = matrix.Row(id);
      auto it = row.begin();
      for (std::size_t p = 0; p < m; ++p) {
        const IdeaId idea(static_cast<std::uint32_t>(p));
        Attitude a = Attitude::kUnknown;
        if (it != row.end() && it->first == idea) a = (it++)->second;
        if (a == Attitude::kApprove || (a == Attitude::kUnknown && majority[p])) {
          approved.push_back(idea);
        }
      }
    }
    profile.voters_.push_back(std::move(approved));
    profile.participants_.push_back(id);
  }

  const std::size_t n = profile.voters_.size();
  profile.columns_.assign(n * m, 0.0);
  for (std::size_t v = 0; v < n; ++v) {
    for (IdeaId idea : profile.voters_[v]) profile.columns_[idea.index() * n + v] = 1.0;
  }
  return profile;
}

ApprovalProfile ApprovalProfile::FromSets(
    std::size_t num_ideas, const std::vector<std::vector<IdeaId>>& approvals) {
  ApprovalProfile profile;
  profile.num_ideas_ = num_ideas;
  const std::size_t n = approvals.size();
  profile.columns_.assign(n * num_ideas, 0.0);
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<IdeaId> sorted = approvals[v];
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (IdeaId idea : sorted) {
      if (idea.index() >= num_ideas) {
        throw Error(ErrorCode::kIdentity,
                    "unknown idea " + std::to_string(idea.value()));
      }
      profile.columns_[idea.index() * n + v] = 1.0;
    }
    profile.voters_.push_back(std::move(sorted));
    profile.participants_.emplace_back(static_cast<std::uint32_t>(v));
  }
  return profile;
}

}  // namespace delib
