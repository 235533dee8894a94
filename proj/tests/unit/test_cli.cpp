// Copyright 2026 The Entangle Authors
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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "entangle/state_file.hpp"

namespace {

namespace fs = std::filesystem;

struct CliRun {
  int exit_code;
  std::string out;
  std::string err;
  std::map<std::string, std::string> keys;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("entangle_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  CliRun run(const std::string& args) const {
    const auto out = dir_ / "stdout.txt";
    const auto err = dir_ / "stderr.txt";
    const std::string cmd = std::string("\"") + ENTANGLE_CLI_PATH + "\" " + args + " > \"" + out.string() +
                            "\" 2> \"" + err.string() + "\"";
    const int status = std::system(cmd.c_str());
    CliRun r{WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err), {}};
    std::istringstream lines(r.out);
    for (std::string line; std::getline(lines, line);) {
      const auto eq = line.find('=');
      if (eq != std::string::npos && eq > 0 && line.find(' ') > eq) r.keys[line.substr(0, eq)] = line.substr(eq + 1);
    }
    return r;
  }

  fs::path dir_;
};

TEST_F(CliTest, GenWernerWritesExactMatrix) {
  const auto r = run("gen werner --p 0.5 -o " + path("w.json"));
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(r.keys.at("PARAM_P"), "0.5");
  const auto rho = entangle::read_state_file(path("w.json")).density();
  EXPECT_EQ(rho.matrix(), entangle::werner(0.5).matrix());
}

TEST_F(CliTest, GenGhzIsPureEightDim) {
  ASSERT_EQ(run("gen ghz -o " + path("g.json")).exit_code, 0);
  const auto f = entangle::read_state_file(path("g.json"));
  EXPECT_EQ(f.form, entangle::StateForm::Pure);
  EXPECT_EQ(f.vector->size(), 8u);
}

TEST_F(CliTest, GenRandomIsReproducibleAndNeedsSeed) {
  ASSERT_EQ(run("gen random --dims 3,3 --rank 2 --seed 7 -o " + path("a.json")).exit_code, 0);
  ASSERT_EQ(run("gen random --dims 3,3 --rank 2 --seed 7 -o " + path("b.json")).exit_code, 0);
  EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
  const auto r = run("gen random --dims 3,3 --rank 2");
  EXPECT_EQ(r.exit_code, 64);
  EXPECT_NE(r.err.find("--seed"), std::string::npos);
}

TEST_F(CliTest, GenRejectsBadParameters) {
  EXPECT_EQ(run("gen unicorn").exit_code, 64);
  EXPECT_EQ(run("gen werner").exit_code, 64);
  EXPECT_EQ(run("gen werner --p 2").exit_code, 64);
  EXPECT_EQ(run("gen random --dims 3,x --seed 1").exit_code, 64);
}

TEST_F(CliTest, GenSymAsymRecordsAlpha) {
  ASSERT_EQ(run("gen symasym --n 3 --alpha 0.8 -o " + path("s.json")).exit_code, 0);
  EXPECT_EQ(entangle::read_state_file(path("s.json")).params.at("alpha"), 0.8);
}

TEST_F(CliTest, AnalyzeExitCodes) {
  run("gen werner --p 0.9 -o " + path("w9.json"));
  run("gen werner --p 0.2 -o " + path("w2.json"));
  run("gen symasym --n 3 --alpha 0.8 -o " + path("s.json"));
  const auto ent = run("analyze " + path("w9.json"));
  EXPECT_EQ(ent.exit_code, 1);
  EXPECT_EQ(ent.keys.at("PPT_MARGIN"), "-0.425");
  EXPECT_EQ(ent.keys.at("VERDICT"), "Entangled");
  EXPECT_EQ(run("analyze " + path("w2.json")).exit_code, 0);
  EXPECT_EQ(run("analyze " + path("s.json")).exit_code, 2);
}

TEST_F(CliTest, AnalyzeMalformedFile) {
  std::ofstream(path("bad.json")) << "{\"dims\": [2, 2], \"matrix\": [[[1, 0]]]}";
  const auto r = run("analyze " + path("bad.json"));
  EXPECT_EQ(r.exit_code, 64);
  EXPECT_NE(r.err.find("rows"), std::string::npos);
  std::ofstream(path("neg.json")) << R"({"dims": [2], "matrix": [[[1.5,0],[0,0]], [[0,0],[-0.5,0]]]})";
  const auto n = run("analyze " + path("neg.json"));
  EXPECT_EQ(n.exit_code, 64);
  EXPECT_NE(n.err.find("negative eigenvalue"), std::string::npos);
  EXPECT_EQ(run("analyze " + path("missing.json")).exit_code, 64);
}

TEST_F(CliTest, DistillFidelityTable) {
  const auto r = run("distill --fidelity 0.75 --target 0.99");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(r.keys.at("TARGET_REACHED"), "true");
  EXPECT_GE(std::stod(r.keys.at("FINAL_FIDELITY")), 0.99);
  std::istringstream lines(r.out);
  double prev = 0.0;
  int rows = 0;
  for (std::string line; std::getline(lines, line);) {
    std::istringstream fields(line);
    int step;
    double f, f_next, prob;
    if (fields >> step >> f >> f_next >> prob) {
      EXPECT_GT(f_next, f);
      EXPECT_GT(f_next, prev);
      prev = f_next;
      ++rows;
    }
  }
  EXPECT_GT(rows, 0);
}

TEST_F(CliTest, DistillEdgeCases) {
  const auto done = run("distill --fidelity 1.0");
  EXPECT_EQ(done.exit_code, 0);
  EXPECT_EQ(done.keys.at("STEPS"), "0");
  EXPECT_EQ(run("distill --fidelity 0.4 --target 0.9").exit_code, 3);
  EXPECT_EQ(run("distill").exit_code, 64);
}

TEST_F(CliTest, DistillStateFileWithCertificate) {
  run("gen werner --p 0.5 -o " + path("w.json"));
  const auto r = run("distill " + path("w.json") + " --target 0.9 --copies 1 --seed 3");
  EXPECT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(r.keys.at("DISTILLABILITY"), "Distillable(1)");
  EXPECT_EQ(run("distill " + path("w.json") + " --copies 1").exit_code, 64);
  const auto raw = run("distill " + path("w.json") + " --target 0.9 --no-retwirl");
  EXPECT_EQ(raw.keys.at("RETWIRL"), "false");
}

TEST_F(CliTest, WitnessBuildAndEval) {
  run("gen werner --p 0.5 -o " + path("w.json"));
  const auto build = run("witness build " + path("w.json") + " -o " + path("wit.json"));
  ASSERT_EQ(build.exit_code, 0) << build.err;
  const auto eval = run("witness eval " + path("wit.json") + " " + path("w.json"));
  EXPECT_EQ(eval.exit_code, 0);
  EXPECT_EQ(eval.keys.at("VALUE"), "-0.125");
  EXPECT_EQ(eval.keys.at("DETECTED"), "true");
}

TEST_F(CliTest, WitnessBuildRejectsPpt) {
  run("gen werner --p 0.2 -o " + path("w.json"));
  const auto r = run("witness build " + path("w.json") + " -o " + path("wit.json"));
  EXPECT_EQ(r.exit_code, 4);
  EXPECT_NE(r.err.find("positive partial transpose"), std::string::npos);
}

TEST_F(CliTest, WitnessEvalNoDetection) {
  run("witness build --named w -o " + path("ww.json"));
  run("gen basis --dims 2,2,2 --index 0 -o " + path("b.json"));
  const auto r = run("witness eval " + path("ww.json") + " " + path("b.json"));
  EXPECT_NE(r.exit_code, 0);
  EXPECT_EQ(r.keys.at("VALUE").substr(0, 6), "0.6666");
}

TEST_F(CliTest, WitnessOptimizeNeedsSeed) {
  run("witness build --named jam-transpose -o " + path("j.json"));
  EXPECT_EQ(run("witness optimize " + path("j.json") + " -o " + path("o.json")).exit_code, 64);
  const auto r = run("witness optimize " + path("j.json") + " --restarts 10 --seed 1 -o " + path("o.json"));
  EXPECT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(r.keys.at("LABEL"), "shift-optimized");
  EXPECT_NEAR(std::stod(r.keys.at("SHIFT")), 0.0, 1e-8);
}

TEST_F(CliTest, Classify3OnGhz) {
  run("gen ghz -o " + path("g.json"));
  const auto r = run("witness classify3 " + path("g.json"));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.keys.at("EVIDENCE"), "GHZ\\W");
  EXPECT_EQ(r.keys.at("EVIDENCE_VALUE"), "-0.25");
}

TEST_F(CliTest, MeasureKinds) {
  run("gen bell -o " + path("bell.json"));
  const auto f = run("measure " + path("bell.json") + " --kind formation --seed 1");
  EXPECT_EQ(f.exit_code, 0);
  EXPECT_EQ(f.keys.at("BOUND"), "UPPER");
  EXPECT_NEAR(std::stod(f.keys.at("VALUE")), 1.0, 1e-3);

  run("gen separable --dims 2,2 --terms 2 --seed 4 -o " + path("sep.json"));
  const auto re = run("measure " + path("sep.json") + " --kind relent --seed 2");
  EXPECT_EQ(re.keys.at("BOUND"), "UPPER");
  EXPECT_LE(std::stod(re.keys.at("VALUE")), 1e-3);

  run("gen maxent --d 3 -o " + path("m.json"));
  const auto e = run("measure " + path("m.json") + " --kind entropy");
  EXPECT_NEAR(std::stod(e.keys.at("VALUE")), std::log2(3.0), 1e-9);

  EXPECT_EQ(run("measure " + path("bell.json") + " --kind formation").exit_code, 64);
  EXPECT_EQ(run("measure " + path("sep.json") + " --kind entropy").exit_code, 64);
}

TEST_F(CliTest, SeededOutputIsByteIdentical) {
  run("gen random --dims 2,3 --rank 3 --seed 11 -o " + path("r.json"));
  for (const auto& args : std::vector<std::string>{"measure " + path("r.json") + " --kind formation --seed 5",
                                                   "measure " + path("r.json") + " --kind bounds --seed 5",
                                                   "gen separable --dims 3,3 --terms 5 --seed 9"}) {
    const auto a = run(args);
    const auto b = run(args);
    EXPECT_EQ(a.out, b.out) << args;
    EXPECT_FALSE(a.out.empty());
  }
}

}  // namespace
