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

#include "delib/io.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <fmt/format.h>

#include "delib/csv.h"
#include "delib/error.h"

namespace delib {

namespace fs = std::filesystem;

namespace {

[[noreturn]] void FormatError(std::size_t line, std::size_t column, const std::string& what) {
  throw Error(ErrorCode::kFormat, fmt::format("line {} column {}: {}", line, column, what));
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::uint32_t Narrow(std::size_t i) { return static_cast<std::uint32_t>(i); }

void FinishCellAccounting(const AttitudeMatrix& matrix,
                          const std::set<std::pair<std::size_t, std::size_t>>& skipped_cells,
                          ImportReport& report) {
  report.participants_created = matrix.num_participants();
  report.ideas_created = matrix.num_ideas();
  report.cells_set = matrix.known_cells();
  report.cells_skipped = 0;
  for (const auto& [i, p] : skipped_cells) {
    if (matrix.Get(ParticipantId(Narrow(i)), IdeaId(Narrow(p))) == Attitude::kUnknown) {
      ++report.cells_skipped;
    }
  }
  report.unknown_by_absence = matrix.num_participants() * matrix.num_ideas() -
                              report.cells_set - report.cells_skipped;
}

// Column lookup by any of several header names.
std::optional<std::size_t> FindColumn(const std::vector<std::string>& header,
                                      std::initializer_list<std::string_view> names) {
  for (std::size_t c = 0; c < header.size(); ++c) {
    const std::string_view h = Trim(header[c]);
    for (std::string_view name : names) {
      if (h == name) return c;
    }
  }
  return std::nullopt;
}

enum class CellKind { kAttitude, kPass, kInvalid };

struct CellValue {
  CellKind kind = CellKind::kInvalid;
  Attitude attitude = Attitude::kUnknown;
};

// Shared reader for the two long layouts.
struct LongLayout {
  std::string format;
  std::string value_mapping;
  std::initializer_list<std::string_view> participant_names;
  std::initializer_list<std::string_view> idea_names;
  std::initializer_list<std::string_view> value_names;
  bool declarations;
  CellValue (*map)(std::string_view value, PassMapping pass);
};

CellValue MapBinary(std::string_view v, PassMapping) {
  if (v == "1") return {CellKind::kAttitude, Attitude::kApprove};
  if (v == "0") return {CellKind::kAttitude, Attitude::kDisapprove};
  return {};
}

CellValue MapPolis(std::string_view v, PassMapping pass) {
  if (v == "1") return {CellKind::kAttitude, Attitude::kApprove};
  if (v == "-1") return {CellKind::kAttitude, Attitude::kDisapprove};
  if (v == "0") {
    return {CellKind::kPass,
            pass == PassMapping::kDisapprove ? Attitude::kDisapprove : Attitude::kUnknown};
  }
  return {};
}

Imported ParseLong(std::string_view text, const LongLayout& layout, PassMapping pass) {
  const std::vector<CsvRecord> records = ParseCsv(text);
  if (records.empty()) FormatError(1, 1, "missing header");
  const auto& header = records.front().fields;
  const auto pcol = FindColumn(header, layout.participant_names);
  const auto icol = FindColumn(header, layout.idea_names);
  const auto vcol = FindColumn(header, layout.value_names);
  if (!pcol || !icol || !vcol) {
    FormatError(records.front().line, 1,
                fmt::format("{} header needs participant, idea and vote/value columns",
                            layout.format));
  }

  Imported out;
  ImportReport& report = out.report;
  report.format = layout.format;
  report.value_mapping = layout.value_mapping;
  AttitudeMatrix& matrix = out.matrix;
  std::unordered_map<std::string, ParticipantId> participants;
  std::unordered_map<std::string, IdeaId> ideas;
  std::set<std::pair<std::size_t, std::size_t>> skipped_cells;

  auto participant = [&](const std::string& label) {
    auto it = participants.find(label);
    if (it != participants.end()) return it->second;
    if (matrix.FindParticipant(label)) {
      throw Error(ErrorCode::kFormat, fmt::format("participant label '{}' collides", label));
    }
    const ParticipantId id = matrix.AddParticipant(label);
    participants.emplace(label, id);
    return id;
  };
  auto idea = [&](const std::string& name) {
    auto it = ideas.find(name);
    if (it != ideas.end()) return it->second;
    const IdeaId id = matrix.AddUnattributedIdea(name);
    ideas.emplace(name, id);
    return id;
  };
  auto field = [](const CsvRecord& r, std::size_t c) -> std::string {
    return c < r.fields.size() ? r.fields[c] : std::string();
  };

  for (std::size_t r = 1; r < records.size(); ++r) {
    const CsvRecord& rec = records[r];
    ++report.rows_read;
    const std::string label = field(rec, *pcol);
    const std::string name = field(rec, *icol);
    const std::string raw = field(rec, *vcol);
    const std::string_view value = Trim(raw);
    auto skip = [&](std::size_t column, const std::string& reason) {
      report.skipped.push_back({rec.line, column + 1, raw, reason});
    };
    if (label.empty() && name.empty()) {
      skip(*pcol, "row names neither participant nor idea");
      continue;
    }
    if (label.empty() || name.empty()) {
      if (!layout.declarations) {
        skip(label.empty() ? *pcol : *icol, "missing participant or idea id");
        continue;
      }
      if (!value.empty()) {
        skip(*vcol, "declaration row carries a value");
        continue;
      }
      if (label.empty()) {
        idea(name);
      } else {
        participant(label);
      }
      ++report.declarations;
      continue;
    }
    const ParticipantId pid = participant(label);
    const IdeaId iid = idea(name);
    const CellValue cell = layout.map(value, pass);
    switch (cell.kind) {
      case CellKind::kInvalid:
        skip(*vcol, "unrecognized value");
        skipped_cells.emplace(pid.index(), iid.index());
        break;
      case CellKind::kPass:
        matrix.RecordAttitude(pid, iid, cell.attitude);
        ++report.passes;
        break;
      case CellKind::kAttitude:
        matrix.RecordAttitude(pid, iid, cell.attitude);
        ++report.records_applied;
        break;
    }
  }
  FinishCellAccounting(matrix, skipped_cells, report);
  return out;
}

}  // namespace

bool ImportReport::Reconciles() const {
  if (cells_set + cells_skipped + unknown_by_absence != participants_created * ideas_created) {
    return false;
  }
  if (format == "wide") return rows_read == participants_created;
  return rows_read == declarations + records_applied + passes + skipped.size();
}

Json ImportReport::ToJson() const {
  Json j;
  j["format"] = format;
  j["rows_read"] = rows_read;
  j["participants_created"] = participants_created;
  j["ideas_created"] = ideas_created;
  j["declarations"] = declarations;
  j["records_applied"] = records_applied;
  j["passes"] = passes;
  j["cells_set"] = cells_set;
  j["cells_skipped"] = cells_skipped;
  j["unknown_by_absence"] = unknown_by_absence;
  j["value_mapping"] = value_mapping;
  j["reconciles"] = Reconciles();
  Json skipped_json = Json::array();
  for (const SkippedEntry& s : skipped) {
    skipped_json.push_back(
        {{"line", s.line}, {"column", s.column}, {"value", s.value}, {"reason", s.reason}});
  }
  j["skipped"] = std::move(skipped_json);
  return j;
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kFormat, fmt::format("cannot read '{}'", path.string()));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kFormat, fmt::format("cannot read '{}'", path.string()));
  return buffer.str();
}

void WriteFileAtomically(const fs::path& path, std::string_view content) {
  fs::path temp = path;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kFormat, fmt::format("cannot write '{}'", path.string()));
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::error_code ignored;
      fs::remove(temp, ignored);
      throw Error(ErrorCode::kFormat, fmt::format("cannot write '{}'", path.string()));
    }
  }
  std::error_code ec;
  fs::rename(temp, path, ec);
  if (ec) {
    fs::remove(temp, ec);
    throw Error(ErrorCode::kFormat, fmt::format("cannot write '{}'", path.string()));
  }
}

Imported ParseWideCsv(std::string_view text) {
  const std::vector<CsvRecord> records = ParseCsv(text);
  if (records.empty()) FormatError(1, 1, "missing header");
  Imported out;
  ImportReport& report = out.report;
  report.format = "wide";
  report.value_mapping = "1=approve,0=disapprove,empty=unknown";
  AttitudeMatrix& matrix = out.matrix;

  const CsvRecord& header = records.front();
  std::unordered_set<std::string> seen_ideas;
  for (std::size_t c = 1; c < header.fields.size(); ++c) {
    if (!seen_ideas.insert(header.fields[c]).second) {
      FormatError(header.line, c + 1, fmt::format("duplicate idea header '{}'", header.fields[c]));
    }
    matrix.AddUnattributedIdea(header.fields[c]);
  }
  const std::size_t m = matrix.num_ideas();
  std::set<std::pair<std::size_t, std::size_t>> skipped_cells;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const CsvRecord& rec = records[r];
    ++report.rows_read;
    if (rec.fields.size() > m + 1) {
      FormatError(rec.line, m + 2, "row has more cells than the header");
    }
    const std::string& label = rec.fields[0];
    if (label.empty()) FormatError(rec.line, 1, "empty participant label");
    if (matrix.FindParticipant(label)) {
      FormatError(rec.line, 1, fmt::format("duplicate participant '{}'", label));
    }
    const ParticipantId pid = matrix.AddParticipant(label);
    for (std::size_t c = 1; c < rec.fields.size(); ++c) {
      const std::string_view v = Trim(rec.fields[c]);
      const IdeaId iid(Narrow(c - 1));
      if (v.empty()) continue;
      const CellValue cell = MapBinary(v, PassMapping::kUnknown);
      if (cell.kind != CellKind::kAttitude) {
        report.skipped.push_back({rec.line, c + 1, rec.fields[c], "unrecognized value"});
        skipped_cells.emplace(pid.index(), iid.index());
        continue;
      }
      matrix.RecordAttitude(pid, iid, cell.attitude);
      ++report.records_applied;
    }
  }
  FinishCellAccounting(matrix, skipped_cells, report);
  return out;
}

Imported ImportWideCsv(const fs::path& path) { return ParseWideCsv(ReadFile(path)); }

std::string ExportWideCsv(const AttitudeMatrix& matrix) {
  const std::size_t m = matrix.num_ideas();
  std::vector<std::string> fields;
  fields.reserve(m + 1);
  fields.push_back("participant");
  for (std::size_t p = 0; p < m; ++p) fields.push_back(matrix.idea(IdeaId(Narrow(p))).text);
  std::string out = CsvLine(fields);
  for (std::size_t i = 0; i < matrix.num_participants(); ++i) {
    const ParticipantId pid(Narrow(i));
    fields.assign(m + 1, std::string());
    fields[0] = matrix.participant_label(pid);
    for (const auto& [idea, value] : matrix.Row(pid)) {
      if (value == Attitude::kApprove) fields[idea.index() + 1] = "1";
      if (value == Attitude::kDisapprove) fields[idea.index() + 1] = "0";
    }
    out += CsvLine(fields);
  }
  return out;
}

Imported ParseLongCsv(std::string_view text) {
  static const LongLayout layout{"long", "1=approve,0=disapprove",
                                 {"participant"}, {"idea"}, {"value"}, true, &MapBinary};
  return ParseLong(text, layout, PassMapping::kUnknown);
}

Imported ImportLongCsv(const fs::path& path) { return ParseLongCsv(ReadFile(path)); }

std::string ExportLongCsv(const AttitudeMatrix& matrix) {
  std::string out = "participant,idea,value\n";
  for (std::size_t i = 0; i < matrix.num_participants(); ++i) {
    const std::string& label = matrix.participant_label(ParticipantId(Narrow(i)));
    if (label.empty()) throw Error(ErrorCode::kParameter, "empty participant label");
    out += CsvLine({label, "", ""});
  }
  for (std::size_t p = 0; p < matrix.num_ideas(); ++p) {
    const std::string& text = matrix.idea(IdeaId(Narrow(p))).text;
    if (text.empty()) throw Error(ErrorCode::kParameter, "empty idea text");
    out += CsvLine({"", text, ""});
  }
  for (std::size_t i = 0; i < matrix.num_participants(); ++i) {
    const ParticipantId pid(Narrow(i));
    for (const auto& [idea, value] : matrix.Row(pid)) {
      if (!IsKnown(value)) continue;
      out += CsvLine({matrix.participant_label(pid), matrix.idea(idea).text,
                      value == Attitude::kApprove ? "1" : "0"});
    }
  }
  return out;
}

std::string_view PassMappingName(PassMapping mapping) {
  return mapping == PassMapping::kUnknown ? "unknown" : "disapprove";
}

PassMapping ParsePassMapping(std::string_view name) {
  if (name == "unknown") return PassMapping::kUnknown;
  if (name == "disapprove") return PassMapping::kDisapprove;
  throw Error(ErrorCode::kParameter, fmt::format("unknown pass mapping '{}'", name));
}

Imported ParsePolisVotes(std::string_view text, PassMapping pass) {
  const LongLayout layout{
      "polis",
      fmt::format("1=approve,-1=disapprove,0={}", PassMappingName(pass)),
      {"participant", "voter-id", "pid"},
      {"comment", "comment-id", "tid", "idea"},
      {"vote"},
      false,
      &MapPolis};
  return ParseLong(text, layout, pass);
}

Imported ImportPolisVotes(const fs::path& path, PassMapping pass) {
  return ParsePolisVotes(ReadFile(path), pass);
}

std::string FormatReal(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) return "0";
  return fmt::format("{:.9g}", value);
}

double RoundReal(double value) {
  if (!std::isfinite(value) || value == 0.0) return value;
  return std::stod(fmt::format("{:.9g}", value));
}

namespace {

Json RealOrNull(double value) {
  if (!std::isfinite(value)) return nullptr;
  return RoundReal(value);
}

Json IdeaList(std::span<const IdeaId> ideas) {
  Json out = Json::array();
  for (IdeaId p : ideas) out.push_back(p.value());
  return out;
}

Json IdeaTexts(const AttitudeMatrix& matrix, std::span<const IdeaId> ideas) {
  Json out = Json::array();
  for (IdeaId p : ideas) out.push_back(matrix.idea(p).text);
  return out;
}

}  // namespace

Json SlateToJson(const AttitudeMatrix& matrix, const Slate& slate,
                 std::span<const JrViolation> violations) {
  Json j;
  j["rule"] = std::string(ScoringKindName(slate.kind));
  j["k"] = slate.target_k;
  j["ideas"] = IdeaList(slate.ideas);
  j["idea_texts"] = IdeaTexts(matrix, slate.ideas);
  j["score"] = RoundReal(slate.score);
  Json v = Json::array();
  for (const JrViolation& violation : violations) {
    Json group = Json::array();
    for (ParticipantId p : violation.group) group.push_back(matrix.participant_label(p));
    v.push_back({{"group", std::move(group)},
                 {"group_share", RoundReal(violation.group_share)},
                 {"witness_ideas", IdeaList(violation.witness_ideas)}});
  }
  j["violations"] = std::move(v);
  return j;
}

Json RankingToJson(const AttitudeMatrix& matrix, const Ranking& ranking, std::string_view mode) {
  Json j;
  j["mode"] = std::string(mode);
  j["order"] = IdeaList(ranking.order);
  j["idea_texts"] = IdeaTexts(matrix, ranking.order);
  Json provenance = Json::array();
  for (double x : ranking.provenance) provenance.push_back(RoundReal(x));
  j["provenance"] = std::move(provenance);
  return j;
}

Json PlanToJson(const AttitudeMatrix& matrix, const QueryPlan& plan) {
  Json j;
  j["policy"] = plan.policy_name;
  j["seed"] = plan.seed;
  j["shortfall"] = plan.shortfall;
  Json pairs = Json::array();
  for (const QueryPair& q : plan.pairs) {
    pairs.push_back({{"participant", matrix.participant_label(q.participant)},
                     {"idea", q.idea.value()},
                     {"idea_text", matrix.idea(q.idea).text}});
  }
  j["pairs"] = std::move(pairs);
  return j;
}

Json AuditToJson(const AttitudeMatrix& matrix, const Landscape& landscape) {
  const Clustering& clustering = landscape.clustering;
  const FairnessAudit& audit = landscape.audit;
  Json j;
  j["k"] = clustering.centroids.rows();
  j["clustering_objective"] = RoundReal(clustering.objective);
  j["iterations"] = clustering.iterations;
  j["pca_objective"] = RoundReal(landscape.embedding.objective);
  j["total_variance"] = RoundReal(landscape.embedding.total_variance);
  Json explained = Json::array();
  for (double x : landscape.embedding.explained) explained.push_back(RoundReal(x));
  j["explained"] = std::move(explained);
  j["imputed_cells"] = landscape.complete.num_imputed();
  j["coalition_threshold"] = audit.coalition_threshold;
  Json people = Json::array();
  for (std::size_t i = 0; i < audit.centroid_distance.size(); ++i) {
    people.push_back({{"participant", matrix.participant_label(ParticipantId(Narrow(i)))},
                      {"cluster", clustering.assignment[i] + 1},
                      {"centroid_distance", RealOrNull(audit.centroid_distance[i])},
                      {"nearest_other_distance", RealOrNull(audit.nearest_other_distance[i])}});
  }
  j["participants"] = std::move(people);
  Json coalitions = Json::array();
  for (const BlockingCoalition& c : audit.blocking_coalitions) {
    Json members = Json::array();
    for (std::size_t i : c.members) members.push_back(matrix.participant_label(ParticipantId(Narrow(i))));
    coalitions.push_back(
        {{"candidate", matrix.participant_label(ParticipantId(Narrow(c.candidate)))},
         {"members", std::move(members)}});
  }
  j["blocking_coalitions"] = std::move(coalitions);
  return j;
}

Json TimelineToJson(const MetricsTimeline& timeline) {
  Json j;
  j["policy"] = timeline.policy;
  j["seed"] = timeline.seed;
  Json rounds = Json::array();
  const auto& names = MetricNames();
  for (const RoundMetrics& r : timeline.rounds) {
    Json row;
    row["round"] = r.round;
    row["participants"] = r.participants;
    row["active_participants"] = r.active_participants;
    row["ideas"] = r.ideas;
    const auto values = MetricValues(r);
    for (std::size_t t = 0; t < names.size(); ++t) {
      row[std::string(names[t])] = values[t] ? Json(RoundReal(*values[t])) : Json(nullptr);
    }
    row["exposure_increments"] = r.exposure_increments;
    row["plan_shortfall"] = r.plan_shortfall;
    row["oracle_exact"] = r.oracle_exact;
    row["estimated_slate"] = IdeaList(r.estimated_slate);
    row["oracle_slate"] = IdeaList(r.oracle_slate);
    rounds.push_back(std::move(row));
  }
  j["rounds"] = std::move(rounds);
  return j;
}

std::string TimelineCsv(const MetricsTimeline& timeline) {
  std::string out = "round,metric,value\n";
  const auto& names = MetricNames();
  for (const RoundMetrics& r : timeline.rounds) {
    const auto values = MetricValues(r);
    for (std::size_t t = 0; t < names.size(); ++t) {
      out += fmt::format("{},{},{}\n", r.round, names[t],
                         values[t] ? FormatReal(*values[t]) : std::string());
    }
  }
  return out;
}

std::string TimelineLongCsv(std::span<const MetricsTimeline> timelines) {
  std::string out = "policy,seed,round,metric,value\n";
  const auto& names = MetricNames();
  for (const MetricsTimeline& timeline : timelines) {
    for (const RoundMetrics& r : timeline.rounds) {
      const auto values = MetricValues(r);
      for (std::size_t t = 0; t < names.size(); ++t) {
        out += fmt::format("{},{},{},{},{}\n", CsvEscape(timeline.policy), timeline.seed,
                           r.round, names[t], values[t] ? FormatReal(*values[t]) : std::string());
      }
    }
  }
  return out;
}

namespace {

[[noreturn]] void ConfigError(const std::string& what) {
  throw Error(ErrorCode::kParameter, "config: " + what);
}

const Json& RequireObject(const Json& j, const std::string& where) {
  if (!j.is_object()) ConfigError(where + " must be an object");
  return j;
}

std::uint64_t Count(const Json& j, const std::string& key) {
  if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() &&
                                 j.get<std::int64_t>() < 0)) {
    ConfigError(key + " must be a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

double Real(const Json& j, const std::string& key) {
  if (!j.is_number()) ConfigError(key + " must be a number");
  return j.get<double>();
}

std::string Text(const Json& j, const std::string& key) {
  if (!j.is_string()) ConfigError(key + " must be a string");
  return j.get<std::string>();
}

bool Flag(const Json& j, const std::string& key) {
  if (!j.is_boolean()) ConfigError(key + " must be a boolean");
  return j.get<bool>();
}

std::vector<double> RealList(const Json& j, const std::string& key) {
  if (!j.is_array()) ConfigError(key + " must be a list of numbers");
  std::vector<double> out;
  for (const Json& x : j) out.push_back(Real(x, key));
  return out;
}

MixtureComponent ComponentFromJson(const Json& j, std::size_t dim) {
  RequireObject(j, "mixture component");
  MixtureComponent c;
  bool has_cov = false;
  for (const auto& [key, value] : j.items()) {
    if (key == "weight") {
      c.weight = Real(value, key);
    } else if (key == "mean") {
      c.mean = RealList(value, key);
    } else if (key == "cov") {
      has_cov = true;
      if (value.is_number()) {
        const double var = value.get<double>();
        c.cov.assign(dim, std::vector<double>(dim, 0.0));
        for (std::size_t r = 0; r < dim; ++r) c.cov[r][r] = var;
      } else if (value.is_array()) {
        for (const Json& row : value) c.cov.push_back(RealList(row, "cov row"));
      } else {
        ConfigError("cov must be a number or a matrix");
      }
    } else {
      ConfigError("unknown mixture key '" + key + "'");
    }
  }
  if (!has_cov) {
    c.cov.assign(dim, std::vector<double>(dim, 0.0));
    for (std::size_t r = 0; r < dim; ++r) c.cov[r][r] = 1.0;
  }
  return c;
}

PopulationConfig PopulationFromJson(const Json& j) {
  RequireObject(j, "population");
  PopulationConfig c;
  // latent_dim first so scalar covariances know their size.
  if (j.contains("latent_dim")) c.latent_dim = Count(j["latent_dim"], "latent_dim");
  for (const auto& [key, value] : j.items()) {
    if (key == "n0") {
      c.n0 = Count(value, key);
    } else if (key == "latent_dim") {
      continue;
    } else if (key == "mixture") {
      if (!value.is_array()) ConfigError("mixture must be a list");
      for (const Json& comp : value) c.mixture.push_back(ComponentFromJson(comp, c.latent_dim));
    } else if (key == "approval_radius") {
      c.approval_radius = Real(value, key);
    } else if (key == "noise_sigma") {
      c.noise_sigma = Real(value, key);
    } else if (key == "arrival_rate") {
      c.arrival_rate = Real(value, key);
    } else if (key == "departure_prob") {
      c.departure_prob = Real(value, key);
    } else if (key == "idea_jitter") {
      c.idea_jitter = Real(value, key);
    } else if (key == "seed") {
      c.seed = Count(value, key);
    } else {
      ConfigError("unknown population key '" + key + "'");
    }
  }
  return c;
}

Json PopulationToJson(const PopulationConfig& c) {
  Json j;
  j["n0"] = c.n0;
  j["latent_dim"] = c.latent_dim;
  Json mixture = Json::array();
  for (const MixtureComponent& comp : c.mixture) {
    Json cov = Json::array();
    for (const auto& row : comp.cov) cov.push_back(row);
    mixture.push_back({{"weight", comp.weight}, {"mean", comp.mean}, {"cov", std::move(cov)}});
  }
  j["mixture"] = std::move(mixture);
  j["approval_radius"] = c.approval_radius;
  j["noise_sigma"] = c.noise_sigma;
  j["arrival_rate"] = c.arrival_rate;
  j["departure_prob"] = c.departure_prob;
  j["idea_jitter"] = c.idea_jitter;
  j["seed"] = c.seed;
  return j;
}

}  // namespace

LoopConfig LoopConfigFromJson(const Json& json) {
  RequireObject(json, "config");
  LoopConfig c;
  std::optional<std::uint64_t> seed;
  for (const auto& [key, value] : json.items()) {
    if (key == "rounds") {
      c.rounds = Count(value, key);
    } else if (key == "initial_ideas") {
      c.initial_ideas = Count(value, key);
    } else if (key == "ideas_per_round") {
      c.ideas_per_round = Count(value, key);
    } else if (key == "query_budget_per_round") {
      c.query_budget_per_round = Count(value, key);
    } else if (key == "routing_policy") {
      c.routing_policy = ParseRoutingPolicy(Text(value, key));
    } else if (key == "policies") {
      continue;  // read by ComparePolicyList
    } else if (key == "exact_cap") {
      c.exact_cap = Count(value, key);
    } else if (key == "seed") {
      seed = Count(value, key);
    } else if (key == "weights") {
      RequireObject(value, key);
      for (const auto& [wk, wv] : value.items()) {
        if (wk == "c_explore") {
          c.weights.c_explore = Real(wv, wk);
        } else if (wk == "prior_mean") {
          c.weights.prior_mean = Real(wv, wk);
        } else if (wk == "prior_weight") {
          c.weights.prior_weight = Real(wv, wk);
        } else {
          ConfigError("unknown weights key '" + wk + "'");
        }
      }
    } else if (key == "sense_making") {
      RequireObject(value, key);
      for (const auto& [sk, sv] : value.items()) {
        if (sk == "slate_k") {
          c.sense_making.slate_k = Count(sv, sk);
        } else if (sk == "scoring") {
          c.sense_making.scoring = ParseScoringKind(Text(sv, sk));
        } else if (sk == "landscape_k") {
          c.sense_making.landscape_k = Count(sv, sk);
        } else if (sk == "seed") {
          c.sense_making.seed = Count(sv, sk);
        } else if (sk == "space") {
          c.sense_making.space = ParseClusterSpace(Text(sv, sk));
        } else if (sk == "landscape") {
          c.sense_making.landscape = Flag(sv, sk);
        } else {
          ConfigError("unknown sense_making key '" + sk + "'");
        }
      }
    } else if (key == "population") {
      c.population = PopulationFromJson(value);
    } else {
      ConfigError("unknown key '" + key + "'");
    }
  }
  if (seed) c.population.seed = *seed;
  c.Validate();
  return c;
}

Json LoopConfigToJson(const LoopConfig& c) {
  Json j;
  j["rounds"] = c.rounds;
  j["initial_ideas"] = c.initial_ideas;
  j["ideas_per_round"] = c.ideas_per_round;
  j["query_budget_per_round"] = c.query_budget_per_round;
  j["routing_policy"] = std::string(RoutingPolicyName(c.routing_policy));
  j["exact_cap"] = c.exact_cap;
  j["seed"] = c.population.seed;
  j["weights"] = {{"c_explore", c.weights.c_explore},
                  {"prior_mean", c.weights.prior_mean},
                  {"prior_weight", c.weights.prior_weight}};
  j["sense_making"] = {{"slate_k", c.sense_making.slate_k},
                       {"scoring", std::string(ScoringKindName(c.sense_making.scoring))},
                       {"landscape_k", c.sense_making.landscape_k},
                       {"seed", c.sense_making.seed},
                       {"space", std::string(ClusterSpaceName(c.sense_making.space))},
                       {"landscape", c.sense_making.landscape}};
  j["population"] = PopulationToJson(c.population);
  return j;
}

std::vector<RoutingPolicy> ComparePolicyList(const Json& json) {
  RequireObject(json, "config");
  if (!json.contains("policies")) {
    if (json.contains("routing_policy")) {
      return {ParseRoutingPolicy(Text(json["routing_policy"], "routing_policy"))};
    }
    return {LoopConfig{}.routing_policy};
  }
  const Json& list = json["policies"];
  if (!list.is_array() || list.empty()) ConfigError("policies must be a non-empty list");
  std::vector<RoutingPolicy> out;
  for (const Json& p : list) out.push_back(ParseRoutingPolicy(Text(p, "policies")));
  return out;
}

Json ParseJson(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kFormat, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace delib
