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

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace entangle::cli {

struct GenOptions {
  std::string family;
  std::optional<double> p;
  std::optional<double> alpha;
  std::size_t d = 2;
  std::size_t n = 3;
  std::string dims = "2,2";
  std::optional<std::size_t> rank;
  std::size_t terms = 4;
  std::size_t index = 0;
  std::string bell = "phi+";
  std::optional<std::uint64_t> seed;
  std::string output;
};

struct AnalyzeOptions {
  std::string input;
};

struct DistillOptions {
  std::string input;
  std::optional<double> fidelity;
  double target = 0.99;
  std::size_t max_steps = 20;
  bool no_retwirl = false;
  std::size_t copies = 0;
  std::size_t restarts = 20;
  std::optional<std::uint64_t> seed;
};

struct WitnessBuildOptions {
  std::string input;
  std::string named;
  std::size_t d = 2;
  std::string output;
};

struct WitnessEvalOptions {
  std::string witness;
  std::string state;
};

struct WitnessOptimizeOptions {
  std::string witness;
  std::size_t restarts = 50;
  std::optional<std::uint64_t> seed;
  std::string output;
};

struct Classify3Options {
  std::string input;
};

struct MeasureOptions {
  std::string input;
  std::string kind;
  std::size_t restarts = 8;
  std::size_t size = 0;
  std::optional<std::uint64_t> seed;
};

/// Each command writes its report to `out`, diagnostics to `err`, and
/// returns the process exit code. Input problems surface as exceptions that
/// the caller maps to exit codes.
int run_gen(const GenOptions& opts, std::ostream& out, std::ostream& err);
int run_analyze(const AnalyzeOptions& opts, std::ostream& out, std::ostream& err);
int run_distill(const DistillOptions& opts, std::ostream& out, std::ostream& err);
int run_witness_build(const WitnessBuildOptions& opts, std::ostream& out, std::ostream& err);
int run_witness_eval(const WitnessEvalOptions& opts, std::ostream& out, std::ostream& err);
int run_witness_optimize(const WitnessOptimizeOptions& opts, std::ostream& out, std::ostream& err);
int run_classify3(const Classify3Options& opts, std::ostream& out, std::ostream& err);
int run_measure(const MeasureOptions& opts, std::ostream& out, std::ostream& err);

/// Raised for argument combinations the parser cannot express.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace entangle::cli
