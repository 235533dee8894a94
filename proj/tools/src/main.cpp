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

// entangle: command-line front end for generating, analyzing, distilling and
// quantifying bipartite and three-qubit states.

#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "entangle/state_file.hpp"
#include "report.hpp"

using namespace entangle::cli;

namespace {

const std::vector<std::string> kFamilies{"bell",      "werner", "isotropic", "ghz",  "w",    "symasym",
                                         "random",    "separable", "maxent", "basis"};

void add_seed(CLI::App* app, std::optional<std::uint64_t>& seed) {
  app->add_option("--seed", seed, "Seed for every random choice; required for randomized runs");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement toolkit: separability criteria, witnesses, distillation and measures", "entangle"};
  app.set_version_flag("--version", "entangle 0.1.0");
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a named state family to a state file");
  gen_cmd->add_option("family", gen.family, "State family")->required()->check(CLI::IsMember(kFamilies));
  gen_cmd->add_option("--p", gen.p, "Mixing weight (werner, isotropic, noisy w)");
  gen_cmd->add_option("--alpha", gen.alpha, "Symmetric weight of the sym/antisym family");
  gen_cmd->add_option("--d", gen.d, "Local dimension (isotropic, maxent)")->capture_default_str();
  gen_cmd->add_option("--n", gen.n, "Local dimension of the sym/antisym family")->capture_default_str();
  gen_cmd->add_option("--dims", gen.dims, "Comma-separated local dimensions")->capture_default_str();
  gen_cmd->add_option("--rank", gen.rank, "Rank of a random density matrix; omit for a pure state");
  gen_cmd->add_option("--terms", gen.terms, "Product terms in a separable mixture")->capture_default_str();
  gen_cmd->add_option("--index", gen.index, "Basis index")->capture_default_str();
  gen_cmd->add_option("--kind", gen.bell, "Bell state: phi+, phi-, psi+, psi-")->capture_default_str();
  add_seed(gen_cmd, gen.seed);
  gen_cmd->add_option("-o,--output", gen.output, "Output path; the file goes to stdout when omitted");

  AnalyzeOptions analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Run the separability criteria (exit 0/1/2 = sep/ent/undecided)");
  analyze_cmd->add_option("input", analyze.input, "State file")->required();

  DistillOptions distill;
  auto* distill_cmd = app.add_subcommand("distill", "Trace the recurrence protocol");
  distill_cmd->add_option("input", distill.input, "Two-qubit state file");
  distill_cmd->add_option("--fidelity", distill.fidelity, "Start from the isotropic state of this fidelity");
  distill_cmd->add_option("--target", distill.target, "Stop once the fidelity reaches this")->capture_default_str();
  distill_cmd->add_option("--max-steps", distill.max_steps, "Round limit")->capture_default_str();
  distill_cmd->add_flag("--no-retwirl", distill.no_retwirl, "Feed back the raw post-selected state");
  distill_cmd->add_option("--copies", distill.copies, "Also run the n-copy distillability search (1 or 2)");
  distill_cmd->add_option("--restarts", distill.restarts, "Restarts for the distillability search")
      ->capture_default_str();
  add_seed(distill_cmd, distill.seed);

  auto* witness_cmd = app.add_subcommand("witness", "Build, evaluate and optimize witnesses");
  witness_cmd->require_subcommand(1);

  WitnessBuildOptions build;
  auto* build_cmd = witness_cmd->add_subcommand("build", "Witness from an NPT state or a named construction");
  build_cmd->add_option("input", build.input, "NPT state file");
  build_cmd->add_option("--named", build.named, "ghz, w, jam-transpose or jam-reduction")
      ->check(CLI::IsMember({"ghz", "w", "jam-transpose", "jam-reduction"}));
  build_cmd->add_option("--d", build.d, "Local dimension for jam-*")->capture_default_str();
  build_cmd->add_option("-o,--output", build.output, "Witness file to write")->required();

  WitnessEvalOptions eval;
  auto* eval_cmd = witness_cmd->add_subcommand("eval", "tr(W rho); exit 0 when the witness detects");
  eval_cmd->add_option("witness", eval.witness, "Witness file")->required();
  eval_cmd->add_option("state", eval.state, "State file")->required();

  WitnessOptimizeOptions optimize;
  auto* optimize_cmd = witness_cmd->add_subcommand("optimize", "Shift the witness until it touches product states");
  optimize_cmd->add_option("witness", optimize.witness, "Witness file")->required();
  optimize_cmd->add_option("--restarts", optimize.restarts, "See-saw restarts")->capture_default_str();
  add_seed(optimize_cmd, optimize.seed);
  optimize_cmd->add_option("-o,--output", optimize.output, "Witness file to write")->required();

  Classify3Options classify;
  auto* classify_cmd = witness_cmd->add_subcommand("classify3", "GHZ/W class evidence for a three-qubit state");
  classify_cmd->add_option("input", classify.input, "Three-qubit state file")->required();

  MeasureOptions measure;
  auto* measure_cmd = app.add_subcommand("measure", "Entanglement measures and bounds");
  measure_cmd->add_option("input", measure.input, "State file")->required();
  measure_cmd->add_option("--kind", measure.kind, "entropy, formation, relent or bounds")
      ->required()
      ->check(CLI::IsMember({"entropy", "formation", "relent", "bounds"}));
  measure_cmd->add_option("--restarts", measure.restarts, "Optimizer restarts")->capture_default_str();
  measure_cmd->add_option("--size", measure.size, "Ensemble or mixture size; 0 picks the total dimension")
      ->capture_default_str();
  add_seed(measure_cmd, measure.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (*gen_cmd) return run_gen(gen, std::cout, std::cerr);
    if (*analyze_cmd) return run_analyze(analyze, std::cout, std::cerr);
    if (*distill_cmd) return run_distill(distill, std::cout, std::cerr);
    if (*build_cmd) return run_witness_build(build, std::cout, std::cerr);
    if (*eval_cmd) return run_witness_eval(eval, std::cout, std::cerr);
    if (*optimize_cmd) return run_witness_optimize(optimize, std::cout, std::cerr);
    if (*classify_cmd) return run_classify3(classify, std::cout, std::cerr);
    if (*measure_cmd) return run_measure(measure, std::cout, std::cerr);
  } catch (const entangle::StateFileError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}
