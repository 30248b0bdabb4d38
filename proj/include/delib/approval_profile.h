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

#ifndef DELIB_APPROVAL_PROFILE_H_
#define DELIB_APPROVAL_PROFILE_H_

#include <cstddef>
#include <span>
#include <vector>

#include "delib/attitude_matrix.h"
#include "delib/ids.h"

namespace delib {

enum class UnknownHandling {
  // Unknown cells count as non-approval.
  kNonApproval,
  // Unknown cells count as approval when the idea's known-response mean
  // exceeds 1/2. Opt-in imputation pre-pass.
  kImputeColumnMajority,
};

struct ProfileOptions {
  UnknownHandling unknowns = UnknownHandling::kNonApproval;
  bool active_only = false;
};

// Binary approval data laid out for the scoring kernels: one 0/1 column of
// length num_voters() per idea, plus each voter's approved ideas.
class ApprovalProfile {
 public:
  static ApprovalProfile FromMatrix(const AttitudeMatrix& matrix,
                                    ProfileOptions options = {});
  // approvals[v] lists the ideas voter v approves; ids must be < num_ideas.
  static ApprovalProfile FromSets(
      std::size_t num_ideas, const std::vector<std::vector<IdeaId>>& approvals);

  std::size_t num_voters() const { return voters_.size(); }
  std::size_t num_ideas() const { return num_ideas_; }

  std::span<const double> Column(IdeaId idea) const {
    return {columns_.data() + idea.index() * voters_.size(), voters_.size()};
  }
  // Ascending approved ideas of the voter with dense index v.
  const std::vector<IdeaId>& Approvals(std::size_t v) const { return voters_[v]; }
  // Matrix participant behind voter v.
  ParticipantId Participant(std::size_t v) const { return participants_[v]; }
  bool Approves(std::size_t v, IdeaId idea) const {
    return Column(idea)[v] != 0.0;
  }

 private:
  std::size_t num_ideas_ = 0;
  std::vector<std::vector<IdeaId>> voters_;
  std::vector<ParticipantId> participants_;
  std::vector<double> columns_;  // idea-major
};

}  // namespace delib

#endif  // DELIB_APPROVAL_PROFILE_H_
