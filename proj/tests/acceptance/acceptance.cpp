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

// Acceptance driver: one PASS/FAIL line per criterion, non-zero exit on any
// failure. The optional first argument is the path of the entangle binary.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "entangle/distill.hpp"
#include "entangle/measures.hpp"
#include "entangle/separability.hpp"
#include "entangle/witness.hpp"
#include "oracles.hpp"

namespace {

using namespace entangle;
namespace fs = std::filesystem;

constexpr double kNoLimit = HUGE_VAL;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

bool run_criterion(int id, const char* name, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = secs < limit_s;
  const bool pass = o.pass && in_time;
  const std::string limit = std::isinf(limit_s) ? "no limit" : fmt("limit %.0f s", limit_s);
  std::printf("[%s] %d %s: %s; %.2f s (%s)%s\n", pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), secs,
              limit.c_str(), in_time ? "" : " TIME EXCEEDED");
  std::fflush(stdout);
  return pass;
}

bool ppt_entangled(const DensityMatrix& rho) { return !ppt_criterion(rho).satisfied; }

Outcome werner_threshold() {
  double lo = 0.0, hi = 1.0;
  if (analyze(werner(lo)).status != VerdictStatus::Separable) return {false, "p=0 not separable"};
  if (analyze(werner(hi)).status != VerdictStatus::Entangled) return {false, "p=1 not entangled"};
  while (hi - lo > 1e-9) {
    const double mid = 0.5 * (lo + hi);
    (analyze(werner(mid)).status == VerdictStatus::Entangled ? hi : lo) = mid;
  }
  const double p = 0.5 * (lo + hi);
  const double err = std::abs(p - 1.0 / 3.0);
  return {err <= 1e-6, fmt("p*=%.10f |p*-1/3|=%.2e", p, err)};
}

Outcome criterion_chain() {
  std::size_t violations = 0, total = 0, ppt_fail = 0;
  const std::vector<Dims> all{{2, 2}, {2, 3}, {3, 3}};
  for (std::size_t k = 0; k < all.size(); ++k) {
    const auto& dims = all[k];
    const std::size_t d = total_dimension(dims);
    for (std::uint64_t i = 0; i < 1000; ++i) {
      // White noise spreads the samples across the separability boundary.
      const auto raw = random_density(dims, 1 + i % d, 100000 * (k + 1) + i);
      const double t = (i % 50) / 50.0;
      const DensityMatrix rho(raw.matrix() * Complex(1.0 - t) + ComplexMatrix::identity(d) * Complex(t / double(d)),
                              dims);
      const bool ppt = ppt_criterion(rho).satisfied;
      const bool red = reduction_criterion(rho).satisfied;
      ppt_fail += !ppt;
      // A violated weaker criterion implies every stronger one is violated.
      if (!red && ppt) ++violations;
      if (k < 2 && !majorization_criterion(rho).satisfied && red) ++violations;
      ++total;
    }
  }
  return {violations == 0, fmt("%.0f states, %.0f chain violations, %.0f NPT", double(total), double(violations),
                               double(ppt_fail))};
}

Outcome schmidt_agreement() {
  double worst_coeff = 0.0, worst_rebuild = 0.0;
  const std::vector<Dims> all{{3, 3}, {4, 4}};
  for (std::size_t k = 0; k < all.size(); ++k) {
    const auto& dims = all[k];
    for (std::uint64_t i = 0; i < 500; ++i) {
      const auto psi = random_pure(dims, 200000 + 1000 * k + i);
      const auto sd = schmidt_decompose(psi);
      auto reduced = oracle::eigen_eigenvalues(partial_trace(DensityMatrix(psi).matrix(), dims, 0));
      std::sort(reduced.rbegin(), reduced.rend());
      for (std::size_t j = 0; j < reduced.size(); ++j) {
        const double c = j < sd.rank() ? sd.coefficients[j] : 0.0;
        worst_coeff = std::max(worst_coeff, std::abs(c * c - reduced[j]));
      }
      ComplexVector rebuilt(psi.vector().size(), Complex(0.0));
      for (std::size_t j = 0; j < sd.rank(); ++j) {
        const auto term = tensor(sd.left_basis[j], sd.right_basis[j]);
        for (std::size_t m = 0; m < rebuilt.size(); ++m) rebuilt[m] += sd.coefficients[j] * term[m];
      }
      for (std::size_t m = 0; m < rebuilt.size(); ++m) rebuilt[m] -= psi.vector()[m];
      worst_rebuild = std::max(worst_rebuild, norm(rebuilt));
    }
  }
  return {worst_coeff <= 1e-10 && worst_rebuild <= 1e-8,
          fmt("1000 states, max |c^2-lambda|=%.2e, max reconstruction error=%.2e", worst_coeff, worst_rebuild)};
}

Outcome tripartite_witnesses() {
  const double g = evaluate(ghz_witness(), DensityMatrix(ghz()));
  const double w = evaluate(w_witness(), DensityMatrix(w_state()));
  const std::vector<std::vector<std::size_t>> orders{{0, 1, 2}, {1, 0, 2}, {1, 2, 0}};
  double worst = 1e300;
  for (std::uint64_t i = 0; i < 10000; ++i) {
    const auto psi = tensor(random_pure({2}, 300000 + 2 * i).vector(), random_pure({2, 2}, 300001 + 2 * i).vector());
    const auto v = permute_subsystems(psi, {2, 2, 2}, orders[i % 3]);
    worst = std::min(worst, evaluate(w_witness(), DensityMatrix(PureState(v, {2, 2, 2}))));
  }
  const bool ok = std::abs(g + 0.25) <= 1e-12 && std::abs(w + 1.0 / 3.0) <= 1e-12 && worst >= -1e-8;
  return {ok, fmt("GHZ value %.15f, W value %.15f, min over 10000 biseparable %.3e", g, w, worst)};
}

double phi_plus_fidelity(const DensityMatrix& rho) {
  return expectation(rho.matrix(), bell(BellKind::PhiPlus).vector()).real();
}

Outcome recurrence_map() {
  const auto one = fidelity_map(1.0);
  bool ok = std::abs(one.fidelity - 1.0) <= 1e-12;
  std::size_t improved = 0;
  double worst_algebra = 0.0;
  for (int i = 1; i <= 50; ++i) {
    const double f = 0.5 + 0.5 * i / 51.0;
    const auto up = fidelity_map(f);
    improved += up.fidelity > f;
    const auto [f_ref, p_ref] = oracle::bell_diagonal_recurrence(f);
    worst_algebra = std::max({worst_algebra, std::abs(up.fidelity - f_ref), std::abs(up.success_probability - p_ref)});
  }
  ok = ok && improved == 50 && worst_algebra <= 1e-12;
  std::string detail = fmt("F(1)=%.15f, %.0f/50 grid points improve, algebra gap %.1e", one.fidelity,
                           double(improved), worst_algebra);
  for (double f : {0.6, 0.75, 0.9}) {
    const auto rho = isotropic((4.0 * f - 1.0) / 3.0, 2);
    const double exact = phi_plus_fidelity(recurrence_step(rho).state);
    const auto mc = oracle::monte_carlo_recurrence(rho.matrix(), 1000000, static_cast<std::uint64_t>(1000 * f));
    const double z = std::abs(exact - mc.fidelity) / mc.standard_error;
    ok = ok && z <= 3.0 && std::abs(exact - fidelity_map(f).fidelity) <= 1e-12;
    detail += fmt("; F=%.2f z=%.2f", f, z);
  }
  return {ok, detail};
}

Outcome distillability() {
  std::size_t npt = 0, certified = 0;
  for (std::uint64_t seed = 400000; npt < 200; ++seed) {
    const auto rho = random_density({2, 2}, 1 + seed % 4, seed);
    if (ppt_criterion(rho).margin >= -kSignTol) continue;
    ++npt;
    certified += distillability_test(rho, 1, 5, seed).verdict == DistillabilityVerdict::Distillable;
  }
  std::size_t ppt = 0, inconclusive = 0;
  double lowest = 1e300;
  const std::vector<Dims> all{{2, 2}, {2, 3}, {3, 3}};
  for (std::uint64_t i = 0; i < 50; ++i) {
    const auto& dims = all[i % 3];
    const auto rho = random_separable(dims, 2 + i % 5, 500000 + i);
    if (ppt_criterion(rho).satisfied) ++ppt;
    const auto cert = distillability_test(rho, 1, 5, i);
    inconclusive += cert.verdict == DistillabilityVerdict::Inconclusive;
    lowest = std::min(lowest, cert.value);
  }
  const bool ok = certified == 200 && ppt == 50 && inconclusive == 50 && lowest >= -1e-10;
  return {ok, fmt("NPT certified %.0f/200, PPT inconclusive %.0f/50, lowest PPT value %.3e", double(certified),
                  double(inconclusive), lowest)};
}

Outcome measures() {
  const double pure = pure_entanglement(bell(BellKind::PhiPlus)).value;
  const DensityMatrix bell_rho(bell(BellKind::PhiPlus));
  const double eof = entanglement_of_formation(bell_rho, 0, kDefaultMeasureRestarts, 1).value;
  const double rel = relative_entropy_estimate(bell_rho, 0, kDefaultMeasureRestarts, 1).value;
  double worst_eof = 0.0, worst_rel = 0.0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const Dims dims = i % 2 ? Dims{2, 3} : Dims{2, 2};
    const auto rho = random_separable(dims, 2 + i % 3, 600000 + i);
    worst_eof = std::max(worst_eof, entanglement_of_formation(rho, 0, kDefaultMeasureRestarts, i).value);
    worst_rel = std::max(worst_rel, relative_entropy_estimate(rho, 0, kDefaultMeasureRestarts, i).value);
  }
  const bool ok = std::abs(pure - 1.0) <= 1e-9 && std::abs(eof - 1.0) <= 1e-3 && rel >= 0.95 && rel <= 1.10 &&
                  worst_eof <= 1e-3 && worst_rel <= 1e-3;
  return {ok, fmt("Bell: pure %.9f formation %.6f relent %.4f", pure, eof, rel) +
                  fmt("; separable max formation %.2e relent %.2e", worst_eof, worst_rel)};
}

Outcome sym_antisym_threshold() {
  const std::size_t n = 3;
  double lo = 0.0, hi = 1.0;
  if (!ppt_entangled(sym_antisym_family(n, lo)) || ppt_entangled(sym_antisym_family(n, hi)))
    return {false, "endpoints do not bracket the threshold"};
  while (hi - lo > 1e-9) {
    const double mid = 0.5 * (lo + hi);
    (ppt_entangled(sym_antisym_family(n, mid)) ? lo : hi) = mid;
  }
  const double alpha = 0.5 * (lo + hi);
  const double ref = oracle::sym_antisym_threshold(n);
  return {std::abs(alpha - ref) <= 1e-6, fmt("alpha*=%.10f reference %.10f", alpha, ref)};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome cli_reproducible(const std::string& cli) {
  if (cli.empty()) return {false, "no CLI path given"};
  const fs::path dir = fs::temp_directory_path() / "entangle_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  auto run = [&](const std::string& args, const std::string& tag) {
    const auto out = dir / (tag + ".out");
    const std::string cmd = "\"" + cli + "\" " + args + " > \"" + out.string() + "\" 2>&1";
    const int status = std::system(cmd.c_str());
    return std::make_pair(WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out));
  };
  const std::string p = dir.string() + "/";
  const std::vector<std::pair<std::string, std::string>> commands{
      {"gen random --dims 3,3 --rank 4 --seed 17 -o " + p + "r{}.json", "r{}.json"},
      {"gen separable --dims 2,3 --terms 4 --seed 5 -o " + p + "s{}.json", "s{}.json"},
      {"gen werner --p 0.6 -o " + p + "w{}.json", "w{}.json"},
      {"analyze " + p + "r1.json", ""},
      {"distill " + p + "w1.json --target 0.95 --copies 2 --restarts 4 --seed 3", ""},
      {"witness build " + p + "w1.json -o " + p + "wit{}.json", "wit{}.json"},
      {"witness optimize " + p + "wit1.json --restarts 8 --seed 2 -o " + p + "opt{}.json", "opt{}.json"},
      {"measure " + p + "s1.json --kind formation --seed 9", ""},
      {"measure " + p + "s1.json --kind relent --seed 9", ""},
      {"measure " + p + "w1.json --kind bounds --seed 4", ""},
  };
  auto substitute = [](std::string s, int k) {
    for (auto pos = s.find("{}"); pos != std::string::npos; pos = s.find("{}")) s.replace(pos, 2, std::to_string(k));
    return s;
  };
  std::size_t identical = 0;
  std::string failed;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    const auto& [args, file] = commands[i];
    const auto a = run(substitute(args, 1), "a" + std::to_string(i));
    const auto b = run(substitute(args, 2), "b" + std::to_string(i));
    bool same = a == b && !a.second.empty();
    // The output path is echoed in the report, so compare reports with it masked.
    if (!file.empty()) {
      auto mask = [&](std::string s, int k) {
        const auto path = p + substitute(file, k);
        for (auto pos = s.find(path); pos != std::string::npos; pos = s.find(path)) s.replace(pos, path.size(), "@");
        return s;
      };
      same = a.first == b.first && mask(a.second, 1) == mask(b.second, 2) &&
             slurp(p + substitute(file, 1)) == slurp(p + substitute(file, 2)) &&
             !slurp(p + substitute(file, 1)).empty();
    }
    if (same)
      ++identical;
    else
      failed += " [" + args + "]";
  }
  fs::remove_all(dir);
  return {identical == commands.size(),
          fmt("%.0f/%.0f commands byte-identical across two runs", double(identical), double(commands.size())) +
              failed};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  bool ok = true;
  ok &= run_criterion(1, "Werner threshold by bisection", 1.0, werner_threshold);
  ok &= run_criterion(2, "Criterion implication chain", 30.0, criterion_chain);
  ok &= run_criterion(3, "Schmidt decomposition", kNoLimit, schmidt_agreement);
  ok &= run_criterion(4, "Tripartite witnesses", kNoLimit, tripartite_witnesses);
  ok &= run_criterion(5, "Recurrence protocol", 60.0, recurrence_map);
  ok &= run_criterion(6, "Distillability certificates", 120.0, distillability);
  ok &= run_criterion(7, "Entanglement measures", 300.0, measures);
  ok &= run_criterion(8, "Sym/antisym PPT threshold", 10.0, sym_antisym_threshold);
  ok &= run_criterion(9, "CLI reproducibility", kNoLimit, [&] { return cli_reproducible(cli); });
  std::printf("%s\n", ok ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED");
  return ok ? 0 : 1;
}
