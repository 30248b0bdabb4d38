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

#ifndef DELIB_IO_H_
#define DELIB_IO_H_

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "delib/attitude_matrix.h"
#include "delib/landscape.h"
#include "delib/loop.h"
#include "delib/rankings.h"
#include "delib/routing.h"
#include "delib/slates.h"

namespace delib {

using Json = nlohmann::ordered_json;

struct SkippedEntry {
  std::size_t line = 0;    // 1-based
  std::size_t column = 0;  // 1-based field index
  std::string value;
  std::string reason;
};

struct ImportReport {
  std::string format;  // "wide", "long" or "polis"
  std::size_t rows_read = 0;
  std::size_t participants_created = 0;
  std::size_t ideas_created = 0;
  // Long formats: rows that only declare a participant or idea, rows recorded
  // as an attitude, and pass votes under either mapping.
  std::size_t declarations = 0;
  std::size_t records_applied = 0;
  std::size_t passes = 0;
  // Cell accounting over the final participants x ideas grid.
  std::size_t cells_set = 0;
  std::size_t cells_skipped = 0;  // malformed and left unknown
  std::size_t unknown_by_absence = 0;
  std::vector<SkippedEntry> skipped;
  std::string value_mapping;

  // Cells add up to participants * ideas and, for long formats, every data
  // row is a declaration, an applied record, a pass or a skipped entry.
  bool Reconciles() const;
  Json ToJson() const;
};

struct Imported {
  AttitudeMatrix matrix;
  ImportReport report;
};

// Reads a whole file; throws kFormat when it cannot be read.
std::string ReadFile(const std::filesystem::path& path);
// Writes through a sibling temporary file and a rename. Throws kFormat when
// the destination is not writable.
void WriteFileAtomically(const std::filesystem::path& path, std::string_view content);

// Wide matrix CSV: header `<any>,<idea text>...`, then one row per
// participant `<label>,<cell>...` with 1 = approve, 0 = disapprove, empty =
// unknown. Short rows leave trailing cells unknown. Other cell values are
// skipped and reported. Duplicate idea headers or participant labels, and
// rows longer than the header, throw kFormat with the location.
Imported ParseWideCsv(std::string_view text);
Imported ImportWideCsv(const std::filesystem::path& path);
std::string ExportWideCsv(const AttitudeMatrix& matrix);

// Long matrix CSV with header `participant,idea,value`. A row with an empty
// idea declares a participant, a row with an empty participant declares an
// idea; export writes all declarations first so empty rows and columns
// survive. Later rows for the same cell overwrite earlier ones.
Imported ParseLongCsv(std::string_view text);
Imported ImportLongCsv(const std::filesystem::path& path);
// Throws kParameter if a participant label or idea text is empty.
std::string ExportLongCsv(const AttitudeMatrix& matrix);

enum class PassMapping { kUnknown, kDisapprove };
std::string_view PassMappingName(PassMapping mapping);
// Accepts "unknown" and "disapprove"; throws kParameter otherwise.
PassMapping ParsePassMapping(std::string_view name);

// Polis-style vote export: columns located by header name (participant or
// voter-id; comment, comment-id or idea; vote), other columns ignored. Vote
// 1 approves, -1 disapproves, 0 is a pass handled by `pass`; last row wins
// per cell. Participants and ideas are created in first-seen order with the
// raw ids as labels and texts. A pass recorded as unknown counts as exposure
// and leaves an earlier vote in place. Missing columns throw kFormat.
Imported ParsePolisVotes(std::string_view text, PassMapping pass = PassMapping::kUnknown);
Imported ImportPolisVotes(const std::filesystem::path& path,
                          PassMapping pass = PassMapping::kUnknown);

// Number formatting shared by every exporter: 9 significant digits.
std::string FormatReal(double value);
// `value` rounded to 9 significant digits, for JSON output.
double RoundReal(double value);

Json SlateToJson(const AttitudeMatrix& matrix, const Slate& slate,
                 std::span<const JrViolation> violations);
Json RankingToJson(const AttitudeMatrix& matrix, const Ranking& ranking, std::string_view mode);
Json PlanToJson(const AttitudeMatrix& matrix, const QueryPlan& plan);
Json AuditToJson(const AttitudeMatrix& matrix, const Landscape& landscape);
Json TimelineToJson(const MetricsTimeline& timeline);

// `round,metric,value`, one row per round per metric; missing values empty.
std::string TimelineCsv(const MetricsTimeline& timeline);
// `policy,seed,round,metric,value` over several timelines.
std::string TimelineLongCsv(std::span<const MetricsTimeline> timelines);

// Loop configuration. Recognized keys (all optional): rounds, initial_ideas,
// ideas_per_round, query_budget_per_round, routing_policy, policies (list,
// read by ComparePolicyList), exact_cap, seed (sets population.seed),
// weights {c_explore, prior_mean, prior_weight}, sense_making {slate_k,
// scoring, landscape_k, seed, space, landscape}, population {n0, latent_dim,
// mixture [{weight, mean, cov}], approval_radius, noise_sigma, arrival_rate,
// departure_prob, idea_jitter, seed}. A covariance is a matrix or a scalar
// variance times the identity. Unknown keys and wrong types throw
// kParameter.
LoopConfig LoopConfigFromJson(const Json& json);
Json LoopConfigToJson(const LoopConfig& config);
// The `policies` list, or the single routing_policy when absent.
std::vector<RoutingPolicy> ComparePolicyList(const Json& json);
// Throws kFormat on malformed JSON.
Json ParseJson(std::string_view text);

}  // namespace delib

#endif  // DELIB_IO_H_
