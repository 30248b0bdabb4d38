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

#include "delib/slates.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

#include "delib/error.h"
#include "delib/kernels/kernels.h"

namespace delib {

namespace {

// Scores that differ by less than this relative amount are ties.
constexpr double kTieTolerance = 1e-9;

bool ClearlyGreater(double a, double b) {
  return a > b + kTieTolerance * std::max(1.0, std::abs(b));
}

// Per-voter weight of one more approved idea given c already on the slate.
double VoterWeight(ScoringKind kind, double count) {
  if (kind == ScoringKind::kHarmonic) return 1.0 / (count + 1.0);
  return count == 0.0 ? 1.0 : 0.0;
}

std::vector<IdeaId> Normalize(const ApprovalProfile& profile,
                              std::span<const IdeaId> ideas) {
  std::vector<IdeaId> out(ideas.begin(), ideas.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (IdeaId idea : out) {
    if (idea.index() >= profile.num_ideas()) {
      throw Error(ErrorCode::kIdentity,
                  "unknown idea " + std::to_string(idea.value()));
    }
  }
  return out;
}

void CheckK(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::kParameter, "slate size k must be positive");
}

// Voters approving each idea; used to update counts sparsely.
std::vector<std::vector<std::uint32_t>> Supporters(const ApprovalProfile& profile) {
  std::vector<std::vector<std::uint32_t>> out(profile.num_ideas());
  for (std::size_t v = 0; v < profile.num_voters(); ++v) {
    for (IdeaId idea : profile.Approvals(v)) {
      out[idea.index()].push_back(static_cast<std::uint32_t>(v));
    }
  }
  return out;
}

Slate MakeSlate(const ApprovalProfile& profile, std::vector<IdeaId> ideas,
                std::size_t k, ScoringKind kind) {
  std::sort(ideas.begin(), ideas.end());
  Slate slate;
  slate.score = SlateScore(profile, ideas, kind);
  slate.ideas = std::move(ideas);
  slate.target_k = k;
  slate.kind = kind;
  return slate;
}

std::vector<IdeaId> AllIdeas(std::size_t m) {
  std::vector<IdeaId> all;
  all.reserve(m);
  for (std::size_t p = 0; p < m; ++p) all.emplace_back(static_cast<std::uint32_t>(p));
  return all;
}

}  // namespace

std::string_view ScoringKindName(ScoringKind kind) {
  return kind == ScoringKind::kHarmonic ? "harmonic" : "coverage";
}

ScoringKind ParseScoringKind(std::string_view name) {
  if (name == "harmonic") return ScoringKind::kHarmonic;
  if (name == "coverage") return ScoringKind::kCoverage;
  throw Error(ErrorCode::kParameter,
              "unknown scoring rule '" + std::string(name) + "'");
}

double HarmonicNumber(std::size_t l) {
  double h = 0.0;
  for (std::size_t j = 1; j <= l; ++j) h += 1.0 / static_cast<double>(j);
  return h;
}

double SlateScore(const ApprovalProfile& profile, std::span<const IdeaId> ideas,
                  ScoringKind kind) {
  const std::vector<IdeaId> slate = Normalize(profile, ideas);
  std::vector<double> counts(profile.num_voters(), 0.0);
  for (IdeaId idea : slate) kernels::Axpy(1.0, profile.Column(idea), counts);

  double score = 0.0;
  for (double c : counts) {
    const auto l = static_cast<std::size_t>(c);
    if (kind == ScoringKind::kHarmonic) {
      score += HarmonicNumber(l);
    } else if (l > 0) {
      score += 1.0;
    }
  }
  return score;
}

double SlateScore(const AttitudeMatrix& matrix, std::span<const IdeaId> ideas,
                  ScoringKind kind) {
  return SlateScore(ApprovalProfile::FromMatrix(matrix), ideas, kind);
}

std::vector<GreedyStep> GreedySequence(const ApprovalProfile& profile,
                                       ScoringKind kind, std::size_t steps,
                                       GreedyOptions options) {
  const std::size_t m = profile.num_ideas();
  const std::size_t n = profile.num_voters();
  steps = std::min(steps, m);
  const auto supporters = Supporters(profile);

  std::vector<double> counts(n, 0.0);
  std::vector<double> weights(n, VoterWeight(kind, 0.0));
  std::vector<bool> chosen(m, false);
  std::vector<GreedyStep> sequence;
  sequence.reserve(steps);

  auto take = [&](std::size_t p, double gain) {
    chosen[p] = true;
    sequence.push_back({IdeaId(static_cast<std::uint32_t>(p)), gain});
    for (std::uint32_t v : supporters[p]) {
      counts[v] += 1.0;
      weights[v] = VoterWeight(kind, counts[v]);
    }
  };
  auto gain_of = [&](std::size_t p) {
    return kernels::Dot(profile.Column(IdeaId(static_cast<std::uint32_t>(p))),
                        weights);
  };

  if (!options.lazy) {
    for (std::size_t t = 0; t < steps; ++t) {
      std::size_t best = m;
      double best_gain = -std::numeric_limits<double>::infinity();
      for (std::size_t p = 0; p < m; ++p) {
        if (chosen[p]) continue;
        const double gain = gain_of(p);
        if (best == m || ClearlyGreater(gain, best_gain)) {
          best = p;
          best_gain = gain;
        }
      }
      take(best, best_gain);
    }
    return sequence;
  }

  // Gains only shrink as the slate grows, so a stale gain is an upper bound.
  struct Entry {
    double bound;
    std::size_t idea;
    std::size_t stamp;
  };
  auto lower_priority = [](const Entry& a, const Entry& b) {
    if (a.bound != b.bound) return a.bound < b.bound;
    return a.idea > b.idea;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(lower_priority)> heap(
      lower_priority);
  for (std::size_t p = 0; p < m; ++p) heap.push({gain_of(p), p, 0});
  std::vector<Entry> tied;
  for (std::size_t t = 0; t < steps; ++t) {
    // Refresh until the leader is fresh, then gather every fresh entry within
    // tolerance of it; the eager scan's tie rule picks among them.
    tied.clear();
    while (!heap.empty()) {
      Entry top = heap.top();
      if (!tied.empty() && ClearlyGreater(tied.front().bound, top.bound)) break;
      heap.pop();
      if (top.stamp != t) {
        top.bound = gain_of(top.idea);
        top.stamp = t;
        heap.push(top);
        continue;
      }
      tied.push_back(top);
    }
    std::sort(tied.begin(), tied.end(),
              [](const Entry& a, const Entry& b) { return a.idea < b.idea; });
    std::size_t best = 0;
    for (std::size_t c = 1; c < tied.size(); ++c) {
      if (ClearlyGreater(tied[c].bound, tied[best].bound)) best = c;
    }
    take(tied[best].idea, tied[best].bound);
    for (std::size_t c = 0; c < tied.size(); ++c) {
      if (c != best) heap.push(tied[c]);
    }
  }
  return sequence;
}

Slate GreedySlate(const ApprovalProfile& profile, std::size_t k,
                  ScoringKind kind, GreedyOptions options) {
  CheckK(k);
  std::vector<IdeaId> ideas;
  for (const GreedyStep& step : GreedySequence(profile, kind, k, options)) {
    ideas.push_back(step.idea);
  }
  return MakeSlate(profile, std::move(ideas), k, kind);
}

Slate GreedySlate(const AttitudeMatrix& matrix, std::size_t k, ScoringKind kind,
                  GreedyOptions options) {
  return GreedySlate(ApprovalProfile::FromMatrix(matrix), k, kind, options);
}

std::uint64_t BinomialCoefficient(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (std::uint64_t j = 1; j <= k; ++j) {
    // result * (n - k + j) / j stays integral at every step.
    const std::uint64_t factor = n - k + j;
    const std::uint64_t g = std::gcd(result, j);
    const std::uint64_t r = result / g;
    const std::uint64_t f = factor / (j / g);
    if (r != 0 && f > kMax / r) return kMax;
    result = r * f;
  }
  return result;
}

namespace {

// Depth-first enumeration of k-subsets in lexicographic order. The score of a
// subset is built from marginal gains along the path, so every leaf costs one
// Dot against the current voter weights.
class SubsetSearch {
 public:
  SubsetSearch(const ApprovalProfile& profile, std::size_t k, ScoringKind kind)
      : profile_(profile),
        k_(k),
        kind_(kind),
        supporters_(Supporters(profile)),
        counts_(profile.num_voters(), 0.0),
        weights_(profile.num_voters(), VoterWeight(kind, 0.0)),
        path_(k) {}

  std::vector<IdeaId> Run() {
    Descend(0, 0, 0.0);
    return best_;
  }

 private:
  void Descend(std::size_t start, std::size_t depth, double score) {
    const std::size_t m = profile_.num_ideas();
    if (depth + 1 == k_) {
      for (std::size_t p = start; p < m; ++p) {
        const double total = score + Gain(p);
        if (best_.empty() || ClearlyGreater(total, best_score_)) {
          path_[depth] = p;
          best_score_ = total;
          best_.clear();
          for (std::size_t q : path_) best_.emplace_back(static_cast<std::uint32_t>(q));
        }
      }
      return;
    }
    for (std::size_t p = start; p + (k_ - depth) <= m; ++p) {
      const double gain = Gain(p);
      path_[depth] = p;
      Shift(p, 1.0);
      Descend(p + 1, depth + 1, score + gain);
      Shift(p, -1.0);
    }
  }

  double Gain(std::size_t p) const {
    return kernels::Dot(profile_.Column(IdeaId(static_cast<std::uint32_t>(p))),
                        weights_);
  }

  void Shift(std::size_t p, double delta) {
    for (std::uint32_t v : supporters_[p]) {
      counts_[v] += delta;
      weights_[v] = VoterWeight(kind_, counts_[v]);
    }
  }

  const ApprovalProfile& profile_;
  std::size_t k_;
  ScoringKind kind_;
  std::vector<std::vector<std::uint32_t>> supporters_;
  std::vector<double> counts_;
  std::vector<double> weights_;
  std::vector<std::size_t> path_;
  std::vector<IdeaId> best_;
  double best_score_ = 0.0;
};

}  // namespace

Slate ExactSlate(const ApprovalProfile& profile, std::size_t k, ScoringKind kind,
                 ExactOptions options) {
  CheckK(k);
  const std::size_t m = profile.num_ideas();
  if (k >= m) return MakeSlate(profile, AllIdeas(m), k, kind);
  const std::uint64_t candidates = BinomialCoefficient(m, k);
  if (candidates > options.enumeration_cap) {
    throw Error(ErrorCode::kCapacity,
                "exact slate needs C(" + std::to_string(m) + ", " +
                    std::to_string(k) + ") = " + std::to_string(candidates) +
                    " subsets, above the enumeration cap of " +
                    std::to_string(options.enumeration_cap));
  }
  SubsetSearch search(profile, k, kind);
  return MakeSlate(profile, search.Run(), k, kind);
}

Slate ExactSlate(const AttitudeMatrix& matrix, std::size_t k, ScoringKind kind,
                 ExactOptions options) {
  return ExactSlate(ApprovalProfile::FromMatrix(matrix), k, kind, options);
}

}  // namespace delib
