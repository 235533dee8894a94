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

#include "entangle/measures.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "entangle/separability.hpp"
#include "optimize.hpp"
#include "random_util.hpp"

namespace entangle {

namespace {

constexpr double kRankTol = 1e-13;
constexpr double kClampEigenvalue = 1e-12;
// Restarts stop once an estimate is this close to zero; the eigenvalue clamp
// keeps the relative entropy from resolving anything much smaller.
constexpr double kConvergedValue = 1e-9;

double entropy_of(std::span<const double> spectrum) {
  double s = 0.0;
  for (double l : spectrum)
    if (l > 0.0) s -= l * std::log2(l);
  return s;
}

// Reduced matrix of a normalized pure vector on the smaller factor.
ComplexMatrix reduced_of(std::span<const Complex> w, std::size_t da, std::size_t db) {
  if (da <= db) {
    ComplexMatrix r(da, da);
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t k = i; k < da; ++k) {
        Complex s = 0.0;
        for (std::size_t j = 0; j < db; ++j) s += w[i * db + j] * std::conj(w[k * db + j]);
        r(i, k) = s;
        r(k, i) = std::conj(s);
      }
    return r;
  }
  ComplexMatrix r(db, db);
  for (std::size_t j = 0; j < db; ++j)
    for (std::size_t l = j; l < db; ++l) {
      Complex s = 0.0;
      for (std::size_t i = 0; i < da; ++i) s += w[i * db + j] * std::conj(w[i * db + l]);
      r(j, l) = s;
      r(l, j) = std::conj(s);
    }
  return r;
}

double reduced_entropy(std::span<const Complex> w, std::size_t da, std::size_t db) {
  return entropy_of(eigenvalues(reduced_of(w, da, db)));
}

// 1 - tr(rho_red^2): smooth, and zero exactly on product vectors.
double reduced_linear_entropy(std::span<const Complex> w, std::size_t da, std::size_t db) {
  const auto r = reduced_of(w, da, db);
  double purity = 0.0;
  for (auto z : r.entries()) purity += std::norm(z);
  return 1.0 - purity;
}

// Product of complex Givens rotations, one per index pair, parameterized by
// (theta, phi) per pair.
ComplexMatrix givens_unitary(std::span<const double> params, std::size_t k) {
  ComplexMatrix u = ComplexMatrix::identity(k);
  std::size_t p = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const double c = std::cos(params[p]);
      const double s = std::sin(params[p]);
      const Complex phase = std::polar(1.0, params[p + 1]);
      p += 2;
      for (std::size_t col = 0; col < k; ++col) {
        const Complex ui = u(i, col), uj = u(j, col);
        u(i, col) = c * ui - std::conj(phase) * s * uj;
        u(j, col) = phase * s * ui + c * uj;
      }
    }
  return u;
}

struct Spectrum {
  std::vector<double> weights;
  std::vector<ComplexVector> vectors;
};

Spectrum support_of(const DensityMatrix& rho) {
  const auto eig = hermitian_eig(rho.matrix());
  Spectrum s;
  for (std::size_t k = eig.eigenvalues.size(); k-- > 0;) {
    if (eig.eigenvalues[k] <= kRankTol) break;
    s.weights.push_back(eig.eigenvalues[k]);
    s.vectors.push_back(eig.eigenvectors.column(k));
  }
  return s;
}

void record(OptimizerStats& stats, double best) {
  stats.best_trace.push_back(best);
  stats.restarts = stats.best_trace.size();
}

}  // namespace

std::string_view to_string(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::EntropyPure: return "entropy";
    case MeasureKind::FormationUpper: return "formation";
    case MeasureKind::RelativeEntropyUpper: return "relent";
  }
  return "?";
}

double von_neumann_entropy(const DensityMatrix& rho) { return entropy_of(eigenvalues(rho.matrix())); }

MeasureEstimate pure_entanglement(const PureState& psi) {
  if (psi.dims().size() != 2) throw std::invalid_argument("entropy of entanglement needs a bipartite state");
  const auto rho = ComplexMatrix::projector(psi.vector());
  const double left = entropy_of(eigenvalues(partial_trace(rho, psi.dims(), 0)));
  const double right = entropy_of(eigenvalues(partial_trace(rho, psi.dims(), 1)));
  if (std::abs(left - right) > 1e-9)
    throw std::logic_error("reduced entropies of a pure state disagree");
  return {MeasureKind::EntropyPure, std::max(0.0, 0.5 * (left + right)), {}};
}

MeasureEstimate entanglement_of_formation(const DensityMatrix& rho, std::size_t ensemble_size,
                                          std::size_t restarts, std::uint64_t seed) {
  if (!rho.is_bipartite()) throw std::invalid_argument("entanglement of formation needs a bipartite state");
  if (restarts == 0) throw std::invalid_argument("at least one restart is required");
  const std::size_t da = rho.dims()[0], db = rho.dims()[1];
  const auto support = support_of(rho);
  const std::size_t rank = support.weights.size();
  const std::size_t members = ensemble_size == 0 ? std::max(rank, rho.dimension()) : ensemble_size;
  if (members < rank)
    throw std::invalid_argument("ensemble size " + std::to_string(members) + " is below rank " +
                                std::to_string(rank));
  const std::size_t n = rho.dimension();

  // Unnormalized members w_j = sum_i U_ji sqrt(lambda_i) |v_i>.
  auto members_of = [&](std::span<const double> params) {
    const auto u = givens_unitary(params, members);
    std::vector<ComplexVector> out(members, ComplexVector(n));
    for (std::size_t j = 0; j < members; ++j)
      for (std::size_t i = 0; i < rank; ++i) {
        const Complex c = u(j, i) * std::sqrt(support.weights[i]);
        for (std::size_t x = 0; x < n; ++x) out[j][x] += c * support.vectors[i][x];
      }
    return out;
  };
  auto average = [&](std::span<const double> params, bool linear) {
    double total = 0.0;
    for (auto& w : members_of(params)) {
      const double weight = std::norm(norm(w));
      if (weight < 1e-300) continue;
      const double len = std::sqrt(weight);
      for (auto& z : w) z /= len;
      total += weight * (linear ? reduced_linear_entropy(w, da, db) : reduced_entropy(w, da, db));
    }
    return total;
  };
  const detail::Objective linear = [&](std::span<const double> x) { return average(x, true); };
  const detail::Objective entropy = [&](std::span<const double> x) { return average(x, false); };

  const std::size_t dof = members * (members - 1);
  MeasureEstimate est{MeasureKind::FormationUpper, std::numeric_limits<double>::infinity(), {}};
  for (std::size_t r = 0; r < restarts; ++r) {
    auto rng = detail::restart_rng(seed, r);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::vector<double> x0(dof, 0.0);
    // Restart 0 starts from the eigendecomposition itself.
    if (r > 0)
      for (auto& x : x0) x = angle(rng);

    detail::MinimizeOptions opts;
    opts.floor = 1e-14;
    const auto smooth = detail::bfgs_minimize(linear, x0, opts);
    opts.floor = 1e-12;
    const auto polished = detail::bfgs_minimize(entropy, smooth.x, opts);
    est.stats.iterations += smooth.iterations + polished.iterations;
    est.value = std::min({est.value, polished.value, entropy(smooth.x)});
    record(est.stats, est.value);
    if (est.value <= kConvergedValue) break;
  }
  est.value = std::max(est.value, 0.0);
  return est;
}

MeasureEstimate relative_entropy_estimate(const DensityMatrix& rho, std::size_t mixture_size,
                                          std::size_t restarts, std::uint64_t seed) {
  if (!rho.is_bipartite()) throw std::invalid_argument("relative entropy estimate needs a bipartite state");
  if (restarts == 0) throw std::invalid_argument("at least one restart is required");
  const std::size_t da = rho.dims()[0], db = rho.dims()[1];
  const std::size_t n = rho.dimension();
  const std::size_t terms = mixture_size == 0 ? n : mixture_size;
  const double neg_entropy = -von_neumann_entropy(rho);

  // Per term: 2*da + 2*db real coordinates of the local vectors, then one logit.
  const std::size_t stride = 2 * (da + db) + 1;
  auto sigma_of = [&](std::span<const double> x) {
    ComplexMatrix sigma(n, n);
    double max_logit = -std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < terms; ++t) max_logit = std::max(max_logit, x[t * stride + stride - 1]);
    double z = 0.0;
    for (std::size_t t = 0; t < terms; ++t) {
      const double* p = x.data() + t * stride;
      ComplexVector a(da), b(db);
      for (std::size_t i = 0; i < da; ++i) a[i] = {p[2 * i], p[2 * i + 1]};
      for (std::size_t j = 0; j < db; ++j) b[j] = {p[2 * da + 2 * j], p[2 * da + 2 * j + 1]};
      const double na = norm(a), nb = norm(b);
      if (na < 1e-150 || nb < 1e-150) continue;
      const double weight = std::exp(p[stride - 1] - max_logit);
      z += weight;
      const auto ab = tensor(a, b);
      const double scale = weight / (na * na * nb * nb);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) sigma(r, c) += scale * ab[r] * std::conj(ab[c]);
    }
    if (z > 0.0) sigma *= Complex(1.0 / z);
    return sigma;
  };
  const detail::Objective objective = [&](std::span<const double> x) {
    const auto eig = hermitian_eig(hermitian_part(sigma_of(x)), 1e-6);
    double total = 0.0;
    for (double l : eig.eigenvalues) total += std::max(l, kClampEigenvalue);
    double cross = 0.0;  // tr(rho log2 sigma)
    for (std::size_t k = 0; k < n; ++k) {
      const double l = std::max(eig.eigenvalues[k], kClampEigenvalue) / total;
      const auto v = eig.eigenvectors.column(k);
      cross += std::log2(l) * expectation(rho.matrix(), v).real();
    }
    return neg_entropy - cross;
  };

  // Warm start: rho_A ⊗ rho_B written as a mixture of eigenvector products.
  std::vector<double> warm;
  if (terms >= da * db) {
    const auto ea = hermitian_eig(partial_trace(rho.matrix(), rho.dims(), 0));
    const auto eb = hermitian_eig(partial_trace(rho.matrix(), rho.dims(), 1));
    warm.assign(terms * stride, 0.0);
    std::size_t t = 0;
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < db; ++j, ++t) {
        double* p = warm.data() + t * stride;
        for (std::size_t x = 0; x < da; ++x) {
          p[2 * x] = ea.eigenvectors(x, i).real();
          p[2 * x + 1] = ea.eigenvectors(x, i).imag();
        }
        for (std::size_t y = 0; y < db; ++y) {
          p[2 * da + 2 * y] = eb.eigenvectors(y, j).real();
          p[2 * da + 2 * y + 1] = eb.eigenvectors(y, j).imag();
        }
        const double w = std::max(ea.eigenvalues[i], 0.0) * std::max(eb.eigenvalues[j], 0.0);
        p[stride - 1] = std::log(std::max(w, 1e-12));
      }
    for (; t < terms; ++t) {
      double* p = warm.data() + t * stride;
      p[0] = 1.0;
      p[2 * da] = 1.0;
      p[stride - 1] = std::log(1e-12);
    }
  }

  MeasureEstimate est{MeasureKind::RelativeEntropyUpper, std::numeric_limits<double>::infinity(), {}};
  for (std::size_t r = 0; r < restarts; ++r) {
    auto rng = detail::restart_rng(seed, r);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<double> x0(terms * stride);
    if (r == 0 && !warm.empty()) {
      x0 = warm;
    } else {
      for (auto& x : x0) x = normal(rng);
    }
    detail::MinimizeOptions opts;
    opts.floor = kConvergedValue;
    const auto res = detail::bfgs_minimize(objective, std::move(x0), opts);
    est.stats.iterations += res.iterations;
    est.value = std::min(est.value, res.value);
    record(est.stats, est.value);
    if (est.value <= kConvergedValue) break;
  }
  est.value = std::max(est.value, 0.0);
  return est;
}

BoundsReport bounds_report(const DensityMatrix& rho, std::size_t restarts, std::uint64_t seed) {
  const auto ppt = ppt_criterion(rho);
  BoundsReport report{0.0, entanglement_of_formation(rho, 0, restarts, seed).value, ppt.satisfied,
                      std::nullopt};
  if (!ppt.satisfied) report.distillability = distillability_test(rho, 1, restarts, seed);
  return report;
}

}  // namespace entangle
