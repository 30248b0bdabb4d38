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

// Command-line front end: slates, rankings, landscapes, query routing,
// simulation runs, Polis import and representation audits.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "delib/attitude_matrix.h"
#include "delib/csv.h"
#include "delib/error.h"
#include "delib/io.h"
#include "delib/landscape.h"
#include "delib/loop.h"
#include "delib/rankings.h"
#include "delib/routing.h"
#include "delib/slates.h"
#include "delib/support.h"

namespace {

namespace fs = std::filesystem;
using delib::Error;
using delib::ErrorCode;
using delib::Json;

struct GlobalOptions {
  std::string input;
  std::string input_format = "auto";
  std::string out;
  std::optional<std::uint64_t> seed;
  std::string format = "json";
};

int ExitCode(ErrorCode code) {
  switch (code) {
    case ErrorCode::kFormat:
      return 2;
    case ErrorCode::kParameter:
    case ErrorCode::kIdentity:
      return 3;
    case ErrorCode::kCapacity:
      return 4;
    case ErrorCode::kNumerical:
    case ErrorCode::kUndefined:
      return 5;
  }
  return 1;
}

delib::AttitudeMatrix LoadMatrix(const GlobalOptions& g) {
  if (g.input.empty()) throw Error(ErrorCode::kParameter, "--input is required");
  const std::string text = delib::ReadFile(g.input);
  std::string kind = g.input_format;
  if (kind == "auto") {
    const std::vector<delib::CsvRecord> records = delib::ParseCsv(text);
    kind = "wide";
    if (!records.empty()) {
      const auto& h = records.front().fields;
      for (const std::string& f : h) {
        if (f == "vote") kind = "polis";
      }
      if (h.size() == 3 && h[0] == "participant" && h[1] == "idea" && h[2] == "value") {
        kind = "long";
      }
    }
  }
  if (kind == "wide") return delib::ParseWideCsv(text).matrix;
  if (kind == "long") return delib::ParseLongCsv(text).matrix;
  if (kind == "polis") return delib::ParsePolisVotes(text).matrix;
  throw Error(ErrorCode::kParameter, fmt::format("unknown input format '{}'", kind));
}

std::uint64_t RequireSeed(const GlobalOptions& g) {
  if (!g.seed) throw Error(ErrorCode::kParameter, "--seed is required for this command");
  return *g.seed;
}

void Emit(const GlobalOptions& g, const std::string& content) {
  if (g.out.empty()) {
    std::cout << content;
  } else {
    delib::WriteFileAtomically(g.out, content);
  }
}

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

std::string IdeasCsv(const delib::AttitudeMatrix& matrix, std::span<const delib::IdeaId> ideas,
                     std::span<const double> values, const std::string& value_name) {
  std::string out = delib::CsvLine({"position", "idea", "text", value_name});
  for (std::size_t t = 0; t < ideas.size(); ++t) {
    out += delib::CsvLine({std::to_string(t + 1), std::to_string(ideas[t].value()),
                           matrix.idea(ideas[t]).text,
                           t < values.size() ? delib::FormatReal(values[t]) : std::string()});
  }
  return out;
}

std::vector<delib::IdeaId> ParseIdeaList(const std::string& text,
                                         const delib::AttitudeMatrix& matrix) {
  std::vector<delib::IdeaId> ideas;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    // Numeric ids first, then idea texts.
    std::size_t used = 0;
    std::optional<delib::IdeaId> id;
    try {
      const unsigned long v = std::stoul(item, &used);
      if (used == item.size()) id = delib::IdeaId(static_cast<std::uint32_t>(v));
    } catch (const std::exception&) {
    }
    if (!id) id = matrix.FindIdea(item);
    if (!id || !matrix.HasIdea(*id)) {
      throw Error(ErrorCode::kIdentity, fmt::format("unknown idea '{}'", item));
    }
    ideas.push_back(*id);
  }
  std::sort(ideas.begin(), ideas.end());
  ideas.erase(std::unique(ideas.begin(), ideas.end()), ideas.end());
  return ideas;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deliberation support: slates, rankings, landscapes and elicitation"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  std::uint64_t seed_value = 0;
  app.add_option("--input", g.input, "Input attitude matrix (wide, long or Polis CSV)");
  app.add_option("--input-format", g.input_format, "auto, wide, long or polis")
      ->check(CLI::IsMember({"auto", "wide", "long", "polis"}));
  app.add_option("--out", g.out, "Output file, or directory for landscape/simulate");
  auto* seed_opt = app.add_option("--seed", seed_value, "Seed for every random choice");
  app.add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  // slate
  auto* slate = app.add_subcommand("slate", "Representative slate of k ideas");
  std::size_t slate_k = 0;
  std::string rule = "harmonic";
  bool use_greedy = false;
  bool lazy = false;
  std::uint64_t cap = 1'000'000;
  slate->add_option("--k", slate_k, "Slate size")->required();
  slate->add_option("--rule", rule, "harmonic or coverage");
  auto* exact_flag = slate->add_flag("--exact", "Exhaustive search (default)");
  slate->add_flag("--greedy", use_greedy, "Greedy marginal-gain search")->excludes(exact_flag);
  slate->add_flag("--lazy", lazy, "Lazy evaluation for --greedy");
  slate->add_option("--cap", cap, "Enumeration cap for exact search and the audit");

  // rank
  auto* rank = app.add_subcommand("rank", "Order all ideas");
  std::string mode = "proportional";
  delib::ElicitationWeights weights;
  rank->add_option("--mode", mode, "proportional or elicitation")
      ->check(CLI::IsMember({"proportional", "elicitation"}));
  rank->add_option("--c-explore", weights.c_explore, "Exploration weight");
  rank->add_option("--prior-mean", weights.prior_mean, "Support prior mean");
  rank->add_option("--prior-weight", weights.prior_weight, "Support prior weight");

  // landscape
  auto* landscape = app.add_subcommand("landscape", "Impute, embed, cluster and audit");
  std::size_t landscape_k = 2;
  std::size_t dims = 2;
  std::string space = "embedded";
  landscape->add_option("--k", landscape_k, "Number of clusters");
  landscape->add_option("--dims", dims, "Embedding dimensions");
  landscape->add_option("--space", space, "embedded or full");

  // route
  auto* route = app.add_subcommand("route", "Plan attitude queries");
  std::string policy = "uncertainty";
  std::size_t budget = 0;
  delib::ElicitationWeights route_weights;
  route->add_option("--policy", policy, "uniform, ranking or uncertainty");
  route->add_option("--budget", budget, "Number of queries")->required();
  route->add_option("--c-explore", route_weights.c_explore, "Exploration weight");
  route->add_option("--prior-mean", route_weights.prior_mean, "Support prior mean");
  route->add_option("--prior-weight", route_weights.prior_weight, "Support prior weight");

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Run the deliberation loop on a population");
  std::string config_path;
  simulate->add_option("--config", config_path, "Loop configuration (JSON)")->required();

  // import-polis
  auto* import = app.add_subcommand("import-polis", "Convert a Polis vote export");
  std::string pass_as = "unknown";
  std::string matrix_format = "wide";
  std::string report_path;
  import->add_option("--pass-as", pass_as, "unknown or disapprove");
  import->add_option("--matrix-format", matrix_format, "wide or long")
      ->check(CLI::IsMember({"wide", "long"}));
  import->add_option("--report", report_path, "Import report (JSON); stdout by default");

  // audit
  auto* audit = app.add_subcommand("audit", "Justified-representation audit of a slate");
  std::string idea_list;
  std::size_t audit_k = 0;
  std::size_t strictness = 1;
  std::string audit_rule = "harmonic";
  std::uint64_t audit_cap = 1'000'000;
  audit->add_option("--ideas", idea_list, "Comma-separated idea ids or texts")->required();
  audit->add_option("--k", audit_k, "Committee size (default: number of ideas)");
  audit->add_option("--strictness", strictness, "Ideas a group must share");
  audit->add_option("--rule", audit_rule, "Scoring rule reported with the slate");
  audit->add_option("--cap", audit_cap, "Enumeration cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }
  if (seed_opt->count() > 0) g.seed = seed_value;

  try {
    const bool csv = g.format == "csv";
    if (slate->parsed()) {
      const delib::AttitudeMatrix matrix = LoadMatrix(g);
      const delib::ScoringKind kind = delib::ParseScoringKind(rule);
      const delib::Slate s =
          use_greedy ? delib::GreedySlate(matrix, slate_k, kind, delib::GreedyOptions{lazy})
                     : delib::ExactSlate(matrix, slate_k, kind, delib::ExactOptions{cap});
      delib::JrAuditOptions audit_options;
      audit_options.enumeration_cap = cap;
      const auto violations = delib::JrAudit(matrix, s, audit_options);
      if (csv) {
        std::vector<double> approvals;
        for (delib::IdeaId idea : s.ideas) {
          approvals.push_back(static_cast<double>(matrix.approvals(idea)));
        }
        Emit(g, IdeasCsv(matrix, s.ideas, approvals, "approvals"));
      } else {
        Emit(g, Dump(delib::SlateToJson(matrix, s, violations)));
      }
    } else if (rank->parsed()) {
      const delib::AttitudeMatrix matrix = LoadMatrix(g);
      weights.Validate();
      const delib::Ranking r = mode == "proportional"
                                   ? delib::ProportionalRanking(matrix)
                                   : delib::ElicitationRanking(matrix, weights);
      if (csv) {
        Emit(g, IdeasCsv(matrix, r.order, r.provenance,
                         mode == "proportional" ? "marginal_score" : "priority"));
      } else {
        Emit(g, Dump(delib::RankingToJson(matrix, r, mode)));
      }
    } else if (landscape->parsed()) {
      const delib::AttitudeMatrix matrix = LoadMatrix(g);
      delib::LandscapeOptions options;
      options.k = landscape_k;
      options.seed = RequireSeed(g);
      options.space = delib::ParseClusterSpace(space);
      options.dims = dims;
      const delib::Landscape result = delib::BuildLandscape(matrix, options);
      const Json audit_json = delib::AuditToJson(matrix, result);
      const delib::DenseMatrix& points = result.embedding.points;
      std::vector<std::string> header = {"participant"};
      for (std::size_t d = 0; d < points.cols(); ++d) {
        header.push_back(d < 3 ? std::string(1, "xyz"[d]) : fmt::format("dim{}", d + 1));
      }
      header.push_back("cluster");
      std::string embedding_csv = delib::CsvLine(header);
      for (std::size_t i = 0; i < points.rows(); ++i) {
        std::vector<std::string> row = {
            matrix.participant_label(delib::ParticipantId(static_cast<std::uint32_t>(i)))};
        for (std::size_t d = 0; d < points.cols(); ++d) {
          row.push_back(delib::FormatReal(points(i, d)));
        }
        row.push_back(std::to_string(result.clustering.assignment[i] + 1));
        embedding_csv += delib::CsvLine(row);
      }
      if (g.out.empty()) {
        std::cout << (csv ? embedding_csv : Dump(audit_json));
      } else {
        const fs::path dir = g.out;
        std::error_code ec;
        fs::create_directories(dir, ec);
        if (ec) throw Error(ErrorCode::kFormat, fmt::format("cannot create '{}'", g.out));
        std::string components_csv = delib::CsvLine({"component", "idea", "text", "loading"});
        const delib::DenseMatrix& comps = result.embedding.components;
        for (std::size_t d = 0; d < comps.rows(); ++d) {
          for (std::size_t p = 0; p < comps.cols(); ++p) {
            const delib::IdeaId idea(static_cast<std::uint32_t>(p));
            components_csv += delib::CsvLine({std::to_string(d + 1), std::to_string(p),
                                              matrix.idea(idea).text,
                                              delib::FormatReal(comps(d, p))});
          }
        }
        delib::WriteFileAtomically(dir / "embedding.csv", embedding_csv);
        delib::WriteFileAtomically(dir / "components.csv", components_csv);
        delib::WriteFileAtomically(dir / "audit.json", Dump(audit_json));
      }
    } else if (route->parsed()) {
      const delib::AttitudeMatrix matrix = LoadMatrix(g);
      route_weights.Validate();
      const std::vector<delib::ParticipantId> active = matrix.ActiveParticipants();
      const delib::QueryPlan plan =
          delib::Plan(delib::ParseRoutingPolicy(policy), matrix, active, budget, route_weights,
                      RequireSeed(g));
      if (csv) {
        std::string out = delib::CsvLine({"participant", "idea", "text"});
        for (const delib::QueryPair& q : plan.pairs) {
          out += delib::CsvLine({matrix.participant_label(q.participant),
                                 std::to_string(q.idea.value()), matrix.idea(q.idea).text});
        }
        Emit(g, out);
      } else {
        Emit(g, Dump(delib::PlanToJson(matrix, plan)));
      }
    } else if (simulate->parsed()) {
      const Json config_json = delib::ParseJson(delib::ReadFile(config_path));
      delib::LoopConfig config = delib::LoopConfigFromJson(config_json);
      const bool seeded = config_json.contains("seed") ||
                          (config_json.contains("population") &&
                           config_json["population"].contains("seed"));
      if (g.seed) {
        config.population.seed = *g.seed;
      } else if (!seeded) {
        throw Error(ErrorCode::kParameter, "simulate needs --seed or a seed in the config");
      }
      if (g.out.empty()) throw Error(ErrorCode::kParameter, "simulate needs --out <dir>");
      const std::vector<delib::RoutingPolicy> policies = delib::ComparePolicyList(config_json);
      if (!config_json.contains("policies")) config.routing_policy = policies.front();
      const std::vector<delib::MetricsTimeline> timelines =
          delib::ComparePolicies(config, policies);

      const fs::path dir = g.out;
      std::error_code ec;
      fs::create_directories(dir, ec);
      if (ec) throw Error(ErrorCode::kFormat, fmt::format("cannot create '{}'", g.out));
      delib::WriteFileAtomically(dir / "timeline.csv", delib::TimelineCsv(timelines.front()));
      if (timelines.size() > 1) {
        for (const delib::MetricsTimeline& t : timelines) {
          delib::WriteFileAtomically(dir / fmt::format("timeline_{}.csv", t.policy),
                                     delib::TimelineCsv(t));
        }
      }
      delib::WriteFileAtomically(dir / "timeline_long.csv", delib::TimelineLongCsv(timelines));
      Json summary;
      summary["config"] = delib::LoopConfigToJson(config);
      Json runs = Json::array();
      for (const delib::MetricsTimeline& t : timelines) runs.push_back(delib::TimelineToJson(t));
      summary["runs"] = std::move(runs);
      delib::WriteFileAtomically(dir / "summary.json", Dump(summary));
    } else if (import->parsed()) {
      if (g.input.empty()) throw Error(ErrorCode::kParameter, "--input is required");
      const delib::Imported imported =
          delib::ImportPolisVotes(g.input, delib::ParsePassMapping(pass_as));
      const std::string matrix_text = matrix_format == "wide"
                                          ? delib::ExportWideCsv(imported.matrix)
                                          : delib::ExportLongCsv(imported.matrix);
      const std::string report = Dump(imported.report.ToJson());
      if (g.out.empty()) {
        std::cout << matrix_text;
        if (!report_path.empty()) delib::WriteFileAtomically(report_path, report);
      } else {
        delib::WriteFileAtomically(g.out, matrix_text);
        if (report_path.empty()) {
          std::cout << report;
        } else {
          delib::WriteFileAtomically(report_path, report);
        }
      }
    } else if (audit->parsed()) {
      const delib::AttitudeMatrix matrix = LoadMatrix(g);
      delib::Slate s;
      s.ideas = ParseIdeaList(idea_list, matrix);
      s.kind = delib::ParseScoringKind(audit_rule);
      s.target_k = audit_k == 0 ? s.ideas.size() : audit_k;
      s.score = delib::SlateScore(matrix, s.ideas, s.kind);
      delib::JrAuditOptions options;
      options.strictness = strictness;
      options.enumeration_cap = audit_cap;
      const auto violations = delib::JrAudit(matrix, s, options);
      Json j = delib::SlateToJson(matrix, s, violations);
      j["strictness"] = strictness;
      j["satisfied"] = violations.empty();
      Emit(g, Dump(j));
    }
  } catch (const Error& e) {
    std::cerr << "error (" << delib::ErrorCodeName(e.code()) << "): " << e.what() << "\n";
    return ExitCode(e.code());
  }
  return 0;
}
