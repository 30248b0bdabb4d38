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

#include "delib/attitude_matrix.h"

#include <algorithm>
#include <string>

#include "delib/error.h"

namespace delib {

namespace {

auto FindEntry(std::vector<AttitudeMatrix::RowEntry>& row, IdeaId idea) {
  return std::lower_bound(
      row.begin(), row.end(), idea,
      [](const AttitudeMatrix::RowEntry& e, IdeaId id) { return e.first < id; });
}

}  // namespace

ParticipantId AttitudeMatrix::AddParticipant(std::string label) {
  const ParticipantId id(static_cast<std::uint32_t>(labels_.size()));
  if (label.empty()) label = std::to_string(id.value());
  if (participant_index_.contains(label)) {
    throw Error(ErrorCode::kIdentity, "duplicate participant label '" + label + "'");
  }
  participant_index_.emplace(label, id);
  labels_.push_back(std::move(label));
  active_.push_back(true);
  rows_.emplace_back();
  ++num_active_;
  return id;
}

void AttitudeMatrix::Deactivate(ParticipantId participant) {
  CheckParticipant(participant);
  if (active_[participant.index()]) {
    active_[participant.index()] = false;
    --num_active_;
  }
}

IdeaId AttitudeMatrix::AddIdea(std::string text, ParticipantId author) {
  CheckParticipant(author);
  return AppendIdea(Idea{std::move(text), author});
}

IdeaId AttitudeMatrix::AddUnattributedIdea(std::string text) {
  return AppendIdea(Idea{std::move(text), std::nullopt});
}

IdeaId AttitudeMatrix::AppendIdea(Idea idea) {
  const IdeaId id(static_cast<std::uint32_t>(ideas_.size()));
  idea_index_.try_emplace(idea.text, id);
  ideas_.push_back(std::move(idea));
  exposure_.push_back(0);
  abstentions_.push_back(0);
  approvals_.push_back(0);
  responses_.push_back(0);
  return id;
}

void AttitudeMatrix::RecordAttitude(ParticipantId participant, IdeaId idea,
                                    Attitude value) {
  CheckParticipant(participant);
  CheckIdea(idea);
  if (!active_[participant.index()]) {
    throw Error(ErrorCode::kIdentity,
                "participant " + labels_[participant.index()] + " is inactive");
  }
  ++exposure_[idea.index()];
  ++total_exposure_;
  if (value == Attitude::kUnknown) {
    ++abstentions_[idea.index()];
    return;
  }

  auto& row = rows_[participant.index()];
  auto it = FindEntry(row, idea);
  if (it != row.end() && it->first == idea) {
    const Attitude previous = it->second;
    if (previous == value) return;
    change_log_.push_back({participant, idea, previous, value});
    if (previous == Attitude::kApprove) --approvals_[idea.index()];
    if (value == Attitude::kApprove) ++approvals_[idea.index()];
    it->second = value;
    return;
  }
  row.insert(it, {idea, value});
  ++known_cells_;
  ++responses_[idea.index()];
  if (value == Attitude::kApprove) ++approvals_[idea.index()];
}

Attitude AttitudeMatrix::Get(ParticipantId participant, IdeaId idea) const {
  CheckParticipant(participant);
  CheckIdea(idea);
  const auto& row = rows_[participant.index()];
  auto it = std::lower_bound(
      row.begin(), row.end(), idea,
      [](const RowEntry& e, IdeaId id) { return e.first < id; });
  if (it != row.end() && it->first == idea) return it->second;
  return Attitude::kUnknown;
}

ApprovalSet AttitudeMatrix::GetApprovalSet(ParticipantId participant) const {
  CheckParticipant(participant);
  ApprovalSet set{participant, {}};
  for (const auto& [idea, value] : rows_[participant.index()]) {
    if (value == Attitude::kApprove) set.ideas.push_back(idea);
  }
  return set;
}

std::optional<double> AttitudeMatrix::ColumnMean(IdeaId idea) const {
  CheckIdea(idea);
  const std::size_t n = responses_[idea.index()];
  if (n == 0) return std::nullopt;
  return static_cast<double>(approvals_[idea.index()]) / static_cast<double>(n);
}

double AttitudeMatrix::CompletionRate() const {
  const std::size_t cells = num_participants() * num_ideas();
  if (cells == 0) {
    throw Error(ErrorCode::kUndefined, "completion rate of an empty matrix");
  }
  return static_cast<double>(known_cells_) / static_cast<double>(cells);
}

MatrixSnapshot AttitudeMatrix::Snapshot() const {
  return std::make_shared<const AttitudeMatrix>(*this);
}

bool AttitudeMatrix::IsActive(ParticipantId participant) const {
  CheckParticipant(participant);
  return active_[participant.index()];
}

std::vector<ParticipantId> AttitudeMatrix::ActiveParticipants() const {
  std::vector<ParticipantId> out;
  out.reserve(num_active_);
  for (std::size_t i = 0; i < active_.size(); ++i) {
    if (active_[i]) out.emplace_back(static_cast<std::uint32_t>(i));
  }
  return out;
}

const std::string& AttitudeMatrix::participant_label(ParticipantId p) const {
  CheckParticipant(p);
  return labels_[p.index()];
}

const Idea& AttitudeMatrix::idea(IdeaId p) const {
  CheckIdea(p);
  return ideas_[p.index()];
}

std::optional<ParticipantId> AttitudeMatrix::FindParticipant(
    const std::string& label) const {
  auto it = participant_index_.find(label);
  if (it == participant_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<IdeaId> AttitudeMatrix::FindIdea(const std::string& text) const {
  auto it = idea_index_.find(text);
  if (it == idea_index_.end()) return std::nullopt;
  return it->second;
}

std::span<const AttitudeMatrix::RowEntry> AttitudeMatrix::Row(
    ParticipantId participant) const {
  CheckParticipant(participant);
  return rows_[participant.index()];
}

std::uint64_t AttitudeMatrix::exposure(IdeaId idea) const {
  CheckIdea(idea);
  return exposure_[idea.index()];
}

std::uint64_t AttitudeMatrix::abstentions(IdeaId idea) const {
  CheckIdea(idea);
  return abstentions_[idea.index()];
}

std::size_t AttitudeMatrix::approvals(IdeaId idea) const {
  CheckIdea(idea);
  return approvals_[idea.index()];
}

std::size_t AttitudeMatrix::responses(IdeaId idea) const {
  CheckIdea(idea);
  return responses_[idea.index()];
}

void AttitudeMatrix::CheckParticipant(ParticipantId p) const {
  if (!HasParticipant(p)) {
    throw Error(ErrorCode::kIdentity,
                "unknown participant " + std::to_string(p.value()));
  }
}

void AttitudeMatrix::CheckIdea(IdeaId p) const {
  if (!HasIdea(p)) {
    throw Error(ErrorCode::kIdentity, "unknown idea " + std::to_string(p.value()));
  }
}

bool HaveSameAttitudes(const AttitudeMatrix& a, const AttitudeMatrix& b) {
  if (a.num_participants() != b.num_participants() ||
      a.num_ideas() != b.num_ideas()) {
    return false;
  }
  for (std::size_t p = 0; p < a.num_ideas(); ++p) {
    const IdeaId id(static_cast<std::uint32_t>(p));
    if (a.idea(id).text != b.idea(id).text) return false;
  }
  for (std::size_t i = 0; i < a.num_participants(); ++i) {
    const ParticipantId id(static_cast<std::uint32_t>(i));
    if (a.participant_label(id) != b.participant_label(id)) return false;
    const auto ra = a.Row(id);
    const auto rb = b.Row(id);
    if (!std::equal(ra.begin(), ra.end(), rb.begin(), rb.end())) return false;
  }
  return true;
}

}  // namespace delib
