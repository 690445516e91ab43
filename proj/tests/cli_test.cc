// Copyright 2026 The JohnSpace Authors
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

#include "johnspace/cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"

namespace johnspace {
namespace {

namespace fs = std::filesystem;

const std::string kFixtures = JOHNSPACE_FIXTURE_DIR;

int run(const std::vector<std::string>& args, std::string* out_text = nullptr) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  if (out_text) *out_text = out.str();
  return code;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("johnspace_cli_test_" + std::string(
                ::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

TEST_F(CliTest, HelpSucceeds) { EXPECT_EQ(run({"--help"}), kExitPass); }

TEST_F(CliTest, BadInvocationsAreInputErrors) {
  EXPECT_EQ(run({}), kExitInputError);
  EXPECT_EQ(run({"frobnicate"}), kExitInputError);
  EXPECT_EQ(run({"analyze", "--domain", path("missing.json")}), kExitInputError);
  EXPECT_EQ(run({"analyze", "--domain", kFixtures + "/disk.json", "--center", "5,5"}),
            kExitInputError);
  EXPECT_EQ(run({"analyze", "--domain", kFixtures + "/disk.json", "--grid", "-1"}),
            kExitInputError);
}

TEST_F(CliTest, AnalyzeWritesReport) {
  std::string text;
  ASSERT_EQ(run({"analyze", "--domain", kFixtures + "/disk.json", "--center", "0,0", "--grid",
                 "0.1", "--samples", "20"},
                &text),
            kExitPass);
  const nlohmann::json report = nlohmann::json::parse(text);
  EXPECT_EQ(report["kind"], "analyze");
  EXPECT_TRUE(report["pass"].get<bool>());
}

TEST_F(CliTest, TooSmallConstantIsPropertyFailure) {
  EXPECT_EQ(run({"analyze", "--domain", kFixtures + "/disk.json", "--center", "0,0", "--grid",
                 "0.1", "--samples", "20", "--constants", R"({"a":0.5})"}),
            kExitPropertyFailure);
}

TEST_F(CliTest, RenderIsDeterministic) {
  const std::string report = path("r.json");
  ASSERT_EQ(run({"chain", "--domain", kFixtures + "/slit.json", "--center", "1.0,0.8", "--grid",
                 "0.04", "--basepoint", "1.0,0.62", "--out", report}),
            kExitPass);
  ASSERT_EQ(run({"render", "--report", report, "--out", path("a.svg")}), kExitPass);
  ASSERT_EQ(run({"render", "--report", report, "--out", path("b.svg")}), kExitPass);
  const std::string svg = slurp(path("a.svg"));
  EXPECT_EQ(svg, slurp(path("b.svg")));
  std::size_t paths = 0;
  for (std::size_t at = svg.find("<path"); at != std::string::npos; at = svg.find("<path", at + 1)) {
    ++paths;
  }
  EXPECT_EQ(paths, 1u);
  EXPECT_NE(svg.find("<circle"), std::string::npos);
}

TEST_F(CliTest, RenderRejectsMalformedReport) {
  std::ofstream(path("bad.json")) << "{\"kind\": \"analyze\"";
  EXPECT_EQ(run({"render", "--report", path("bad.json"), "--out", path("x.svg")}),
            kExitInputError);
  EXPECT_FALSE(fs::exists(path("x.svg")));
}

}  // namespace
}  // namespace johnspace
