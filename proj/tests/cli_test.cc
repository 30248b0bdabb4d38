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

// Runs the command-line binary end to end.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "delib/csv.h"
#include "delib/io.h"
#include "test_util.h"

namespace delib {
namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("delib_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    WriteFileAtomically(dir_ / "m.csv", "p,a,b,c,d\nu1,1,1,0,\nu2,1,1,0,0\nu3,0,0,1,1\nu4,,1,0,1\n");
  }
  void TearDown() override { fs::remove_all(dir_); }

  RunResult Run(const std::string& args) const {
    const fs::path out = dir_ / "stdout.txt";
    const fs::path err = dir_ / "stderr.txt";
    const std::string command = "cd '" + dir_.string() + "' && '" DELIB_CLI_PATH "' " + args +
                                " > '" + out.string() + "' 2> '" + err.string() + "'";
    const int status = std::system(command.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = ReadFile(out);
    r.err = ReadFile(err);
    return r;
  }

  fs::path dir_;
};

TEST_F(CliTest, SlateJson) {
  const RunResult r = Run("--input m.csv slate --k 2");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const Json j = ParseJson(r.out);
  EXPECT_EQ(j["rule"], "harmonic");
  EXPECT_EQ(j["ideas"], Json::parse("[1, 3]"));
  EXPECT_DOUBLE_EQ(j["score"].get<double>(), 4.5);
  EXPECT_TRUE(j["violations"].empty());
}

TEST_F(CliTest, GreedyAndCsv) {
  const RunResult greedy = Run("--input m.csv slate --k 2 --greedy --lazy");
  ASSERT_EQ(greedy.exit_code, 0) << greedy.err;
  EXPECT_EQ(ParseJson(greedy.out)["ideas"], Json::parse("[1, 3]"));
  const RunResult csv = Run("--input m.csv --format csv rank");
  ASSERT_EQ(csv.exit_code, 0) << csv.err;
  const auto rows = ParseCsv(csv.out);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[1].fields[2], "b");
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(Run("--input missing.csv slate --k 2").exit_code, 2);
  WriteFileAtomically(dir_ / "bad.csv", "p,a\nx,\"1\n");
  EXPECT_EQ(Run("--input bad.csv slate --k 1").exit_code, 2);
  EXPECT_EQ(Run("--input m.csv slate --k 0").exit_code, 3);
  EXPECT_EQ(Run("--input m.csv slate --k 2 --rule borda").exit_code, 3);
  EXPECT_EQ(Run("--input m.csv slate --k 2 --cap 1").exit_code, 4);
  EXPECT_EQ(Run("--input m.csv route --budget 2").exit_code, 3);  // no seed
  EXPECT_EQ(Run("--input m.csv --seed 1 landscape").exit_code, 0);
  EXPECT_EQ(Run("--bogus").exit_code, 3);
  EXPECT_EQ(Run("slate").exit_code, 3);
}

TEST_F(CliTest, SeededCommandsAreReproducible) {
  for (const std::string args :
       {"--input m.csv --seed 5 route --budget 3 --policy uniform",
        "--input m.csv --seed 5 route --budget 3 --policy uncertainty",
        "--input m.csv --seed 5 landscape --k 2",
        "--input m.csv --seed 5 --format csv landscape --k 2",
        "--input m.csv rank --mode elicitation", "--input m.csv audit --ideas a,b"}) {
    const RunResult a = Run(args);
    const RunResult b = Run(args);
    ASSERT_EQ(a.exit_code, 0) << args << ": " << a.err;
    EXPECT_EQ(a.out, b.out) << args;
  }
}

TEST_F(CliTest, LandscapeDirectory) {
  ASSERT_EQ(Run("--input m.csv --seed 2 --out land landscape --k 2").exit_code, 0);
  const auto rows = ParseCsv(ReadFile(dir_ / "land" / "embedding.csv"));
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0].fields, (std::vector<std::string>{"participant", "x", "y", "cluster"}));
  EXPECT_TRUE(rows[1].fields[3] == "1" || rows[1].fields[3] == "2");
  EXPECT_TRUE(ParseJson(ReadFile(dir_ / "land" / "audit.json")).contains("blocking_coalitions"));
  EXPECT_TRUE(fs::exists(dir_ / "land" / "components.csv"));
}

TEST_F(CliTest, ImportPolisRoundTrip) {
  WriteFileAtomically(dir_ / "votes.csv",
                      "timestamp,voter-id,comment-id,vote\n1,5,12,1\n2,6,12,0\n3,5,13,-1\n");
  const RunResult r =
      Run("--input votes.csv --out matrix.csv import-polis --matrix-format long --report r.json");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const Imported im = ImportLongCsv(dir_ / "matrix.csv");
  EXPECT_EQ(im.matrix.num_participants(), 2u);
  EXPECT_EQ(im.matrix.Get(*im.matrix.FindParticipant("5"), *im.matrix.FindIdea("13")),
            Attitude::kDisapprove);
  const Json report = ParseJson(ReadFile(dir_ / "r.json"));
  EXPECT_EQ(report["passes"], 1);
  EXPECT_EQ(report["reconciles"], true);
  // The converted matrix is accepted as input with format detection.
  EXPECT_EQ(Run("--input matrix.csv slate --k 1").exit_code, 0);
}

TEST_F(CliTest, SimulateWritesTimelines) {
  const std::string config = std::string("--config '") + DELIB_CONFIG_DIR + "/small.json'";
  ASSERT_EQ(Run("--seed 3 --out sim simulate " + config).exit_code, 0);
  ASSERT_EQ(Run("--seed 3 --out sim2 simulate " + config).exit_code, 0);
  for (const char* file : {"timeline.csv", "timeline_long.csv", "timeline_uniform.csv",
                           "timeline_uncertainty.csv", "summary.json"}) {
    EXPECT_EQ(ReadFile(dir_ / "sim" / file), ReadFile(dir_ / "sim2" / file)) << file;
  }
  const auto rows = ParseCsv(ReadFile(dir_ / "sim" / "timeline.csv"));
  EXPECT_EQ(rows.size(), 1 + 5 * MetricNames().size());
  ASSERT_EQ(Run("--seed 4 --out sim3 simulate " + config).exit_code, 0);
  EXPECT_NE(ReadFile(dir_ / "sim" / "timeline_long.csv"),
            ReadFile(dir_ / "sim3" / "timeline_long.csv"));
  // A seed is mandatory when the configuration carries none.
  EXPECT_EQ(Run("--out sim4 simulate " + config).exit_code, 3);
}

}  // namespace
}  // namespace delib
