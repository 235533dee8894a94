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

#include "commands.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <string_view>

#include "entangle/distill.hpp"
#include "entangle/measures.hpp"
#include "entangle/separability.hpp"
#include "entangle/state_file.hpp"
#include "entangle/witness.hpp"
#include "report.hpp"

namespace entangle::cli {

namespace {

Dims parse_dims(const std::string& text) {
  Dims dims;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string part = text.substr(start, comma - start);
    std::size_t used = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (part.empty() || used != part.size() || value == 0)
      throw UsageError("--dims expects positive integers separated by commas, got '" + text + "'");
    dims.push_back(value);
    start = comma + 1;
  }
  return dims;
}

std::uint64_t require_seed(const std::optional<std::uint64_t>& seed, std::string_view what) {
  if (!seed) throw UsageError(std::string(what) + " is randomized; pass --seed");
  return *seed;
}

double require_param(const std::optional<double>& value, std::string_view flag, std::string_view family) {
  if (!value) throw UsageError("family '" + std::string(family) + "' needs " + std::string(flag));
  return *value;
}

DensityMatrix load_density(const std::string& path) { return read_state_file(path).density(); }

void emit_state(const StateFile& file, const std::string& output, Report& report, std::ostream& out) {
  if (output.empty()) {
    out << serialize(file);
    return;
  }
  write_state_file(output, file);
  report.put("FORM", to_string(file.form));
  report.put("DIMS", format_dims(file.dims));
  for (const auto& [key, value] : file.params) {
    std::string upper = "PARAM_";
    for (char c : key) upper += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    report.put(upper, value);
  }
  if (file.seed) report.put("SEED", static_cast<std::size_t>(*file.seed));
  report.put("OUTPUT", output);
}

std::string_view conclusion_for(const WitnessKind& kind) {
  switch (kind.cls) {
    case WitnessClass::Entanglement: return "entangled";
    case WitnessClass::Schmidt: return "schmidt-number-at-least-k";
    case WitnessClass::GHZ: return "GHZ\\W";
    case WitnessClass::W: return "outside-biseparable";
  }
  return "none";
}

std::string_view evidence_name(TripartiteEvidence e) {
  switch (e) {
    case TripartiteEvidence::GhzNotW: return "GHZ\\W";
    case TripartiteEvidence::OutsideBiseparable: return "outside-biseparable";
    case TripartiteEvidence::NoConclusion: return "none";
  }
  return "none";
}

void print_trace(const RecurrenceTrace& trace, std::ostream& out) {
  if (trace.steps.empty()) return;
  char line[128];
  std::snprintf(line, sizeof line, "%-6s %-16s %-16s %s\n", "step", "F", "F'", "success_prob");
  out << line;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& s = trace.steps[i];
    std::snprintf(line, sizeof line, "%-6zu %-16.12f %-16.12f %.12f\n", i + 1, s.fidelity_before,
                  s.fidelity_after, s.success_probability);
    out << line;
  }
}

PureState as_pure(const StateFile& file) {
  if (file.form == StateForm::Pure) return file.pure();
  const auto rho = file.density();
  const auto eig = hermitian_eig(rho.matrix());
  if (eig.eigenvalues.back() < 1.0 - 1e-10)
    throw UsageError("entropy of entanglement needs a pure state (largest eigenvalue " +
                     format_value(eig.eigenvalues.back()) + "); use --kind formation or relent");
  return PureState::normalized(eig.eigenvectors.column(eig.eigenvalues.size() - 1), rho.dims());
}

}  // namespace

int run_gen(const GenOptions& opts, std::ostream& out, std::ostream&) {
  Report report(out);
  StateFile file;
  const std::string& f = opts.family;
  std::string provenance = "gen " + f;
  if (f == "bell") {
    file = StateFile::from(bell(parse_bell_kind(opts.bell)));
    provenance += " " + opts.bell;
  } else if (f == "werner") {
    const double p = require_param(opts.p, "--p", f);
    file = StateFile::from(werner(p));
    file.params["p"] = p;
  } else if (f == "isotropic") {
    const double p = require_param(opts.p, "--p", f);
    file = StateFile::from(isotropic(p, opts.d));
    file.params["p"] = p;
    file.params["d"] = static_cast<double>(opts.d);
  } else if (f == "ghz") {
    file = StateFile::from(ghz());
  } else if (f == "w") {
    if (opts.p) {
      file = StateFile::from(noisy_w(*opts.p));
      file.params["p"] = *opts.p;
    } else {
      file = StateFile::from(w_state());
    }
  } else if (f == "symasym") {
    const double alpha = require_param(opts.alpha, "--alpha", f);
    file = StateFile::from(sym_antisym_family(opts.n, alpha));
    file.params["alpha"] = alpha;
    file.params["n"] = static_cast<double>(opts.n);
  } else if (f == "random") {
    const auto seed = require_seed(opts.seed, "gen random");
    const auto dims = parse_dims(opts.dims);
    if (opts.rank) {
      file = StateFile::from(random_density(dims, *opts.rank, seed));
      file.params["rank"] = static_cast<double>(*opts.rank);
    } else {
      file = StateFile::from(random_pure(dims, seed));
    }
    file.seed = seed;
  } else if (f == "separable") {
    const auto seed = require_seed(opts.seed, "gen separable");
    file = StateFile::from(random_separable(parse_dims(opts.dims), opts.terms, seed));
    file.params["terms"] = static_cast<double>(opts.terms);
    file.seed = seed;
  } else if (f == "maxent") {
    file = StateFile::from(maximally_entangled(opts.d));
    file.params["d"] = static_cast<double>(opts.d);
  } else if (f == "basis") {
    file = StateFile::from(basis_state(parse_dims(opts.dims), opts.index));
    file.params["index"] = static_cast<double>(opts.index);
  } else {
    throw UsageError("unknown family '" + f + "'");
  }
  file.provenance = provenance;
  if (!opts.output.empty()) report.put("FAMILY", f);
  emit_state(file, opts.output, report, out);
  return kExitOk;
}

int run_analyze(const AnalyzeOptions& opts, std::ostream& out, std::ostream&) {
  const auto rho = load_density(opts.input);
  const auto verdict = analyze(rho);
  Report report(out);
  report.put("DIMS", format_dims(verdict.dims));
  for (const auto& r : verdict.basis) {
    std::string name(to_string(r.criterion));
    for (auto& c : name) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    report.put(name + "_SATISFIED", r.satisfied);
    report.put(name + "_MARGIN", r.margin);
    report.put(name + "_BOUNDARY", r.boundary);
  }
  report.put("PPT_SUFFICIENT", ppt_is_sufficient(rho.dims()));
  report.put("VERDICT", to_string(verdict.status));
  switch (verdict.status) {
    case VerdictStatus::Separable: return kExitOk;
    case VerdictStatus::Entangled: return kExitEntangled;
    case VerdictStatus::Undecided: return kExitUndecided;
  }
  return kExitInternal;
}

int run_distill(const DistillOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.fidelity && !opts.input.empty()) throw UsageError("give either a state file or --fidelity, not both");
  if (!opts.fidelity && opts.input.empty()) throw UsageError("give a two-qubit state file or --fidelity");
  Report report(out);

  const bool scalar = opts.fidelity.has_value();
  if (scalar && (*opts.fidelity < 0.25 || *opts.fidelity > 1.0))
    throw UsageError("--fidelity must lie in [1/4, 1], got " + format_value(*opts.fidelity));
  const DensityMatrix rho = scalar ? werner((4.0 * *opts.fidelity - 1.0) / 3.0) : load_density(opts.input);
  const double f0 = scalar ? *opts.fidelity : twirl_to_isotropic(rho).fidelity;

  if (opts.copies != 0) {
    const auto seed = require_seed(opts.seed, "distillability search");
    const auto cert = distillability_test(rho, opts.copies, opts.restarts, seed);
    report.put("DISTILLABILITY", to_string(cert));
    report.put("DISTILLABILITY_VALUE", cert.value);
    report.put("DISTILLABILITY_RESTARTS", cert.restarts);
    report.put("SEED", static_cast<std::size_t>(seed));
  }

  report.put("INITIAL_FIDELITY", f0);
  report.put("TARGET", opts.target);
  report.put("RETWIRL", !opts.no_retwirl);
  if (f0 <= 0.5 && opts.target > f0) {
    err << "error: non-improving regime: F = " << format_value(f0)
        << " <= 1/2, where a recurrence round does not raise the fidelity\n";
    report.put("REGIME", "non-improving");
    return kExitNonImproving;
  }

  const RecurrenceTrace trace = scalar && !opts.no_retwirl ? iterate(f0, opts.target, opts.max_steps)
                                                           : iterate_state(rho, opts.target, opts.max_steps,
                                                                           !opts.no_retwirl);
  print_trace(trace, out);
  const double final_f = trace.steps.empty() ? f0 : trace.steps.back().fidelity_after;
  report.put("STEPS", trace.steps.size());
  report.put("FINAL_FIDELITY", final_f);
  report.put("PAIRS_CONSUMED", trace.pairs_consumed_estimate);
  report.put("TARGET_REACHED", trace.target_reached);
  return trace.target_reached ? kExitOk : kExitEntangled;
}

int run_witness_build(const WitnessBuildOptions& opts, std::ostream& out, std::ostream& err) {
  if (!opts.named.empty() && !opts.input.empty()) throw UsageError("give either a state file or --named, not both");
  if (opts.named.empty() && opts.input.empty()) throw UsageError("give an NPT state file or --named");
  Report report(out);

  std::optional<WitnessOperator> w;
  std::optional<double> value_on_source;
  if (!opts.named.empty()) {
    if (opts.named == "ghz") w = ghz_witness();
    else if (opts.named == "w") w = w_witness();
    else if (opts.named == "jam-transpose") w = jamiolkowski(MapKind::Transpose, opts.d);
    else if (opts.named == "jam-reduction") w = jamiolkowski(MapKind::Reduction, opts.d);
    else throw UsageError("unknown named witness '" + opts.named + "'");
  } else {
    const auto rho = load_density(opts.input);
    const auto ppt = ppt_criterion(rho);
    if (ppt.satisfied) {
      err << "error: input has a positive partial transpose (minimum eigenvalue " << format_value(ppt.margin)
          << "); no witness can be built from it\n";
      return kExitPptInput;
    }
    w = construct_from_npt(rho);
    value_on_source = evaluate(*w, rho);
  }

  write_state_file(opts.output, StateFile::from(*w));
  report.put("WITNESS_KIND", to_string(w->kind()));
  report.put("DIMS", format_dims(w->dims()));
  report.put("PROVENANCE", w->provenance());
  if (value_on_source) report.put("VALUE_ON_SOURCE", *value_on_source);
  report.put("OUTPUT", opts.output);
  return kExitOk;
}

int run_witness_eval(const WitnessEvalOptions& opts, std::ostream& out, std::ostream&) {
  const auto w = read_state_file(opts.witness).witness();
  const auto rho = load_density(opts.state);
  Report report(out);
  report.put("WITNESS_KIND", to_string(w.kind()));
  bool detected = false;
  if (w.kind().cls == WitnessClass::Schmidt) {
    const auto r = schmidt_witness_eval(w, rho);
    detected = r.certified;
    report.put("VALUE", r.value);
    report.put("DETECTED", detected);
    if (detected) report.put("SCHMIDT_NUMBER_AT_LEAST", r.k);
    else report.put("CONCLUSION", "none");
  } else {
    const double value = evaluate(w, rho);
    detected = value < -kSignTol;
    report.put("VALUE", value);
    report.put("DETECTED", detected);
    report.put("CONCLUSION", detected ? conclusion_for(w.kind()) : std::string_view("none"));
  }
  return detected ? kExitOk : kExitEntangled;
}

int run_witness_optimize(const WitnessOptimizeOptions& opts, std::ostream& out, std::ostream&) {
  const auto seed = require_seed(opts.seed, "witness optimize");
  const auto w = read_state_file(opts.witness).witness();
  const auto shifted = shift_optimize(w, opts.restarts, seed);
  write_state_file(opts.output, StateFile::from(shifted.witness));
  Report report(out);
  report.put("LABEL", "shift-optimized");
  report.put("SHIFT", shifted.shift);
  report.put("RESIDUAL", shifted.residual);
  report.put("RESTARTS", shifted.restarts);
  report.put("SEED", static_cast<std::size_t>(seed));
  report.put("OUTPUT", opts.output);
  return kExitOk;
}

int run_classify3(const Classify3Options& opts, std::ostream& out, std::ostream&) {
  const auto c = classify_tripartite(load_density(opts.input));
  Report report(out);
  report.put("GHZ_WITNESS_VALUE", c.ghz_value);
  report.put("W_WITNESS_VALUE", c.w_value);
  report.put("OUTSIDE_BISEPARABLE", c.outside_biseparable);
  report.put("GHZ_NOT_W", c.ghz_not_w);
  const auto evidence = c.strongest();
  report.put("EVIDENCE", evidence_name(evidence));
  if (evidence == TripartiteEvidence::GhzNotW) report.put("EVIDENCE_VALUE", c.ghz_value);
  if (evidence == TripartiteEvidence::OutsideBiseparable) report.put("EVIDENCE_VALUE", c.w_value);
  return kExitOk;
}

int run_measure(const MeasureOptions& opts, std::ostream& out, std::ostream&) {
  const auto file = read_state_file(opts.input);
  Report report(out);
  if (opts.kind == "entropy") {
    const auto est = pure_entanglement(as_pure(file));
    report.put("KIND", opts.kind);
    report.put("BOUND", "exact");
    report.put("VALUE", est.value);
    report.put("UNIT", "ebit");
    return kExitOk;
  }

  const auto rho = file.density();
  if (opts.kind == "bounds") {
    const auto seed = require_seed(opts.seed, "measure bounds");
    const auto b = bounds_report(rho, opts.restarts, seed);
    report.put("KIND", opts.kind);
    report.put("LOWER", b.lower);
    report.put("UPPER", b.upper);
    report.put("UPPER_LABEL", "formation-estimate (equals entanglement cost only under the open E_F=E_C conjecture)");
    report.put("PPT", b.ppt_flag);
    if (b.distillability) report.put("DISTILLABILITY", to_string(*b.distillability));
    report.put("UNIT", "ebit");
    report.put("SEED", static_cast<std::size_t>(seed));
    return kExitOk;
  }

  MeasureEstimate est{};
  std::uint64_t seed = 0;
  if (opts.kind == "formation") {
    seed = require_seed(opts.seed, "measure formation");
    est = entanglement_of_formation(rho, opts.size, opts.restarts, seed);
  } else if (opts.kind == "relent") {
    seed = require_seed(opts.seed, "measure relent");
    est = relative_entropy_estimate(rho, opts.size, opts.restarts, seed);
  } else {
    throw UsageError("unknown measure kind '" + opts.kind + "'");
  }
  report.put("KIND", opts.kind);
  report.put("BOUND", "UPPER");
  report.put("VALUE", est.value);
  report.put("UNIT", "ebit");
  report.put("RESTARTS", est.stats.restarts);
  report.put("ITERATIONS", est.stats.iterations);
  report.put("SEED", static_cast<std::size_t>(seed));
  return kExitOk;
}

}  // namespace entangle::cli
