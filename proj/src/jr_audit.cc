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

#include <algorithm>
#include <set>
#include <string>

#include "delib/error.h"
#include "delib/slates.h"

namespace delib {

namespace {

// Calls fn(subset) for every size-l subset of {0..m-1} in lexicographic order.
template <typename Fn>
void ForEachSubset(std::size_t m, std::size_t l, Fn&& fn) {
  if (l > m) return;
  std::vector<std::size_t> idx(l);
  for (std::size_t j = 0; j < l; ++j) idx[j] = j;
  while (true) {
    fn(idx);
    std::size_t j = l;
    while (j > 0 && idx[j - 1] == m - l + (j - 1)) --j;
    if (j == 0) return;
    ++idx[j - 1];
    for (std::size_t t = j; t < l; ++t) idx[t] = idx[t - 1] + 1;
  }
}

bool IsStrictSubset(const std::vector<std::uint32_t>& a,
                    const std::vector<std::uint32_t>& b) {
  return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

std::vector<JrViolation> JrAudit(const ApprovalProfile& profile,
                                 const Slate& slate, JrAuditOptions options) {
  if (slate.target_k == 0) {
    throw Error(ErrorCode::kParameter, "audited slate has target_k = 0");
  }
  if (options.strictness == 0) {
    throw Error(ErrorCode::kParameter, "audit strictness must be positive");
  }
  const std::size_t n = profile.num_voters();
  const std::size_t m = profile.num_ideas();
  const std::size_t level = options.strictness;
  if (n == 0 || level > m) return {};
  if (BinomialCoefficient(m, level) > options.enumeration_cap) {
    throw Error(ErrorCode::kCapacity,
                "audit at strictness " + std::to_string(level) +
                    " exceeds the enumeration cap");
  }

  std::vector<bool> on_slate(m, false);
  for (IdeaId idea : slate.ideas) {
    if (idea.index() >= m) {
      throw Error(ErrorCode::kIdentity,
                  "slate idea " + std::to_string(idea.value()) + " unknown");
    }
    on_slate[idea.index()] = true;
  }
  // Voters whose representation on the slate is below the audited level.
  std::vector<bool> under(n, false);
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t hits = 0;
    for (IdeaId idea : profile.Approvals(v)) hits += on_slate[idea.index()] ? 1 : 0;
    under[v] = hits < level;
  }

  // |group| >= level * n / k, compared in integers.
  const std::size_t k = slate.target_k;
  std::set<std::vector<std::uint32_t>> groups;
  ForEachSubset(m, level, [&](const std::vector<std::size_t>& ideas) {
    std::vector<std::uint32_t> group;
    for (std::size_t v = 0; v < n; ++v) {
      if (!under[v]) continue;
      const bool cohesive = std::all_of(ideas.begin(), ideas.end(), [&](std::size_t p) {
        return profile.Approves(v, IdeaId(static_cast<std::uint32_t>(p)));
      });
      if (cohesive) group.push_back(static_cast<std::uint32_t>(v));
    }
    if (!group.empty() && group.size() * k >= level * n) groups.insert(std::move(group));
  });

  std::vector<JrViolation> violations;
  for (const auto& group : groups) {
    const bool dominated = std::any_of(groups.begin(), groups.end(), [&](const auto& other) {
      return IsStrictSubset(group, other);
    });
    if (dominated) continue;

    JrViolation violation;
    violation.group_share = static_cast<double>(group.size()) / static_cast<double>(n);
    for (std::size_t p = 0; p < m; ++p) {
      const IdeaId idea(static_cast<std::uint32_t>(p));
      const bool common = std::all_of(group.begin(), group.end(), [&](std::uint32_t v) {
        return profile.Approves(v, idea);
      });
      if (common) violation.witness_ideas.push_back(idea);
    }
    for (std::uint32_t v : group) violation.group.push_back(profile.Participant(v));
    violations.push_back(std::move(violation));
  }
  return violations;
}

std::vector<JrViolation> JrAudit(const AttitudeMatrix& matrix, const Slate& slate,
                                 JrAuditOptions options) {
  return JrAudit(ApprovalProfile::FromMatrix(matrix), slate, options);
}

}  // namespace delib
