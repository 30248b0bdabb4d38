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

#ifndef DELIB_SLATES_H_
#define DELIB_SLATES_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "delib/approval_profile.h"
#include "delib/attitude_matrix.h"
#include "delib/ids.h"

namespace delib {

// How a slate X represents participant i, given l = |A_i ∩ X|:
//   kHarmonic: 1 + 1/2 + ... + 1/l  (proportional approval voting)
//   kCoverage: 1 if l > 0, else 0   (Chamberlin-Courant)
enum class ScoringKind { kHarmonic, kCoverage };

std::string_view ScoringKindName(ScoringKind kind);
// Accepts "harmonic" and "coverage"; throws kParameter otherwise.
ScoringKind ParseScoringKind(std::string_view name);

struct Slate {
  std::vector<IdeaId> ideas;  // ascending
  std::size_t target_k = 0;
  double score = 0.0;
  ScoringKind kind = ScoringKind::kHarmonic;
};

// 1 + 1/2 + ... + 1/l; zero for l = 0.
double HarmonicNumber(std::size_t l);

// Total representation score of `ideas`. Duplicates are ignored; an idea
// outside the profile throws kIdentity. Unknown attitudes never count as
// approval unless the profile was built with an imputation pre-pass.
double SlateScore(const ApprovalProfile& profile, std::span<const IdeaId> ideas,
                  ScoringKind kind);
double SlateScore(const AttitudeMatrix& matrix, std::span<const IdeaId> ideas,
                  ScoringKind kind);

struct GreedyStep {
  IdeaId idea;
  double gain = 0.0;  // marginal score when the idea was added
};

struct GreedyOptions {
  // Re-evaluate only the stale top of a max-heap of gain upper bounds.
  // Near-ties are then broken on exact floating-point order rather than with
  // the tolerance the eager path uses.
  bool lazy = false;
};

// The first `steps` picks of greedy marginal-gain maximization, in order.
// Ties (within a relative 1e-9) go to the lowest idea id.
std::vector<GreedyStep> GreedySequence(const ApprovalProfile& profile,
                                       ScoringKind kind, std::size_t steps,
                                       GreedyOptions options = {});

// Throws kParameter for k = 0. Returns every idea when k exceeds their count.
Slate GreedySlate(const ApprovalProfile& profile, std::size_t k,
                  ScoringKind kind, GreedyOptions options = {});
Slate GreedySlate(const AttitudeMatrix& matrix, std::size_t k, ScoringKind kind,
                  GreedyOptions options = {});

struct ExactOptions {
  std::uint64_t enumeration_cap = 1'000'000;
};

// C(n, k), saturating at UINT64_MAX.
std::uint64_t BinomialCoefficient(std::uint64_t n, std::uint64_t k);

// Maximum-score slate of size k by exhaustive enumeration. Among equal scores
// the lexicographically smallest sorted id list wins. Throws kCapacity when
// C(m, k) exceeds the cap and kParameter for k = 0.
Slate ExactSlate(const ApprovalProfile& profile, std::size_t k, ScoringKind kind,
                 ExactOptions options = {});
Slate ExactSlate(const AttitudeMatrix& matrix, std::size_t k, ScoringKind kind,
                 ExactOptions options = {});

// A cohesive group left unrepresented by a slate.
struct JrViolation {
  std::vector<ParticipantId> group;   // ascending
  std::vector<IdeaId> witness_ideas;  // every idea all members approve
  double group_share = 0.0;           // |group| / n
};

struct JrAuditOptions {
  // 1 checks justified representation: no group of at least n/k voters that
  // shares an approved idea may have zero approved ideas on the slate. Level
  // l > 1 checks the extended condition: groups of at least l*n/k voters
  // sharing l ideas must contain a member with at least l approved ideas on
  // the slate.
  std::size_t strictness = 1;
  std::uint64_t enumeration_cap = 1'000'000;
};

// Every maximal violating group. "Shared" means a common subset of approved
// ideas, not identical approval sets. Empty when the slate passes.
std::vector<JrViolation> JrAudit(const ApprovalProfile& profile,
                                 const Slate& slate, JrAuditOptions options = {});
std::vector<JrViolation> JrAudit(const AttitudeMatrix& matrix, const Slate& slate,
                                 JrAuditOptions options = {});

}  // namespace delib

#endif  // DELIB_SLATES_H_
