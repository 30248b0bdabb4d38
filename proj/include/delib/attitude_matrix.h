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

#ifndef DELIB_ATTITUDE_MATRIX_H_
#define DELIB_ATTITUDE_MATRIX_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "delib/attitude.h"
#include "delib/ids.h"

namespace delib {

struct Idea {
  std::string text;
  // Empty for imported ideas whose author is not known.
  std::optional<ParticipantId> author;
};

// One overwritten attitude, kept for auditing.
struct AttitudeChange {
  ParticipantId participant;
  IdeaId idea;
  Attitude previous = Attitude::kUnknown;
  Attitude current = Attitude::kUnknown;
};

struct ApprovalSet {
  ParticipantId participant;
  std::vector<IdeaId> ideas;  // ascending
};

class AttitudeMatrix;
using MatrixSnapshot = std::shared_ptr<const AttitudeMatrix>;

// Sparse participants-by-ideas matrix over {approve, disapprove, unknown}.
//
// Rows and columns only grow. Absent entries read as unknown. Departed
// participants stay in the matrix with their history but are flagged
// inactive and can no longer record attitudes.
//
// Not internally synchronized: one writer mutates the live matrix, readers
// work on Snapshot() copies, which are immutable and safe to share across
// threads.
class AttitudeMatrix {
 public:
  using RowEntry = std::pair<IdeaId, Attitude>;

  AttitudeMatrix() = default;

  // An empty label is replaced by the decimal participant index. Labels must
  // be unique.
  ParticipantId AddParticipant(std::string label = {});
  void Deactivate(ParticipantId participant);

  IdeaId AddIdea(std::string text, ParticipantId author);
  IdeaId AddUnattributedIdea(std::string text);

  // Last write wins; overwriting a known value is appended to change_log().
  // Every call counts as one exposure of `idea`. Recording kUnknown is an
  // abstention: the exposure and abstention counts grow but a stored value is
  // left untouched.
  void RecordAttitude(ParticipantId participant, IdeaId idea, Attitude value);

  Attitude Get(ParticipantId participant, IdeaId idea) const;
  ApprovalSet GetApprovalSet(ParticipantId participant) const;

  // Mean over known entries of the column; nullopt if the column has none.
  std::optional<double> ColumnMean(IdeaId idea) const;
  // Fraction of known cells. Throws kUndefined for an empty matrix.
  double CompletionRate() const;

  MatrixSnapshot Snapshot() const;

  std::size_t num_participants() const { return labels_.size(); }
  std::size_t num_ideas() const { return ideas_.size(); }
  std::size_t known_cells() const { return known_cells_; }

  bool HasParticipant(ParticipantId p) const {
    return p.index() < labels_.size();
  }
  bool HasIdea(IdeaId p) const { return p.index() < ideas_.size(); }
  bool IsActive(ParticipantId participant) const;
  std::vector<ParticipantId> ActiveParticipants() const;
  std::size_t num_active() const { return num_active_; }

  const std::string& participant_label(ParticipantId p) const;
  const Idea& idea(IdeaId p) const;
  std::optional<ParticipantId> FindParticipant(const std::string& label) const;
  // First idea with exactly this text.
  std::optional<IdeaId> FindIdea(const std::string& text) const;

  // Known entries of one row, ascending by idea.
  std::span<const RowEntry> Row(ParticipantId participant) const;

  std::uint64_t exposure(IdeaId idea) const;
  std::uint64_t total_exposure() const { return total_exposure_; }
  std::uint64_t abstentions(IdeaId idea) const;
  std::size_t approvals(IdeaId idea) const;
  std::size_t responses(IdeaId idea) const;

  const std::vector<AttitudeChange>& change_log() const { return change_log_; }

 private:
  void CheckParticipant(ParticipantId p) const;
  void CheckIdea(IdeaId p) const;
  IdeaId AppendIdea(Idea idea);

  std::vector<std::string> labels_;
  std::vector<bool> active_;
  std::vector<std::vector<RowEntry>> rows_;
  std::vector<Idea> ideas_;
  std::vector<std::uint64_t> exposure_;
  std::vector<std::uint64_t> abstentions_;
  std::vector<std::size_t> approvals_;
  std::vector<std::size_t> responses_;
  std::unordered_map<std::string, ParticipantId> participant_index_;
  std::unordered_map<std::string, IdeaId> idea_index_;
  std::vector<AttitudeChange> change_log_;
  std::size_t known_cells_ = 0;
  std::size_t num_active_ = 0;
  std::uint64_t total_exposure_ = 0;
};

// Equal participant labels, idea texts, and known entries. Bookkeeping
// (exposure, activity, authorship, change log) is ignored.
bool HaveSameAttitudes(const AttitudeMatrix& a, const AttitudeMatrix& b);

}  // namespace delib

#endif  // DELIB_ATTITUDE_MATRIX_H_
