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

#include "entangle/separability.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace entangle {

namespace {

void require_bipartite(const Dims& dims) {
  if (dims.size() != 2) throw std::invalid_argument("operation requires a bipartite state");
}

CriterionReport make_report(Criterion c, double margin) {
  return {c, margin >= -kSignTol, margin, std::abs(margin) <= kSignTol};
}

std::vector<double> descending(std::vector<double> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

}  // namespace

std::string_view to_string(Criterion c) {
  switch (c) {
    case Criterion::PPT: return "PPT";
    case Criterion::Reduction: return "Reduction";
    case Criterion::Majorization: return "Majorization";
  }
  return "?";
}

std::string_view to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Separable: return "Separable";
    case VerdictStatus::Entangled: return "Entangled";
    case VerdictStatus::Undecided: return "Undecided";
  }
  return "?";
}

SchmidtDecomposition schmidt_decompose(const PureState& psi, double rank_tol) {
  require_bipartite(psi.dims());
  const std::size_t da = psi.dims()[0], db = psi.dims()[1];
  const auto& v = psi.vector();

  // psi = sum_ij m_ij |i>|j>; rho_A = m m^dagger.
  const ComplexMatrix m(da, db, v);
  const auto eig = hermitian_eig(m * m.adjoint());

  SchmidtDecomposition out;
  for (std::size_t k = da; k-- > 0;) {
    ComplexVector e = eig.eigenvectors.column(k);
    // (<e| ⊗ 1)|psi> = a |f>. The norm is taken directly rather than from
    // sqrt(lambda), which would amplify eigenvalue noise to ~1e-8.
    ComplexVector f(db);
    for (std::size_t j = 0; j < db; ++j) {
      Complex s = 0.0;
      for (std::size_t i = 0; i < da; ++i) s += std::conj(e[i]) * m(i, j);
      f[j] = s;
    }
    const double a = norm(f);
    if (a <= rank_tol) break;
    for (auto& z : f) z /= a;
    out.coefficients.push_back(a);
    out.left_basis.push_back(std::move(e));
    out.right_basis.push_back(std::move(f));
  }
  return out;
}

CriterionReport ppt_criterion(const DensityMatrix& rho) {
  require_bipartite(rho.dims());
  return make_report(Criterion::PPT, min_eigenvalue(partial_transpose(rho.matrix(), rho.dims(), 0)));
}

CriterionReport reduction_criterion(const DensityMatrix& rho) {
  require_bipartite(rho.dims());
  const auto& dims = rho.dims();
  const auto rho_a = partial_trace(rho.matrix(), dims, 0);
  const auto rho_b = partial_trace(rho.matrix(), dims, 1);
  const double left = min_eigenvalue(tensor(rho_a, ComplexMatrix::identity(dims[1])) - rho.matrix());
  const double right = min_eigenvalue(tensor(ComplexMatrix::identity(dims[0]), rho_b) - rho.matrix());
  return make_report(Criterion::Reduction, std::min(left, right));
}

CriterionReport majorization_criterion(const DensityMatrix& rho) {
  require_bipartite(rho.dims());
  const auto& dims = rho.dims();
  const auto global = descending(eigenvalues(rho.matrix()));
  const std::size_t n = global.size();

  double margin = std::numeric_limits<double>::infinity();
  for (std::size_t side = 0; side < 2; ++side) {
    auto reduced = descending(eigenvalues(partial_trace(rho.matrix(), dims, side)));
    reduced.resize(n, 0.0);
    double sum_reduced = 0.0, sum_global = 0.0;
    // The k = n partial sums are both the trace, so that slack carries no information.
    for (std::size_t k = 0; k + 1 < n; ++k) {
      sum_reduced += reduced[k];
      sum_global += global[k];
      margin = std::min(margin, sum_reduced - sum_global);
    }
  }
  if (!std::isfinite(margin)) margin = 0.0;
  return make_report(Criterion::Majorization, margin);
}

bool ppt_is_sufficient(const Dims& dims) {
  if (dims.size() != 2) return false;
  const auto lo = std::min(dims[0], dims[1]);
  const auto hi = std::max(dims[0], dims[1]);
  return lo == 2 && (hi == 2 || hi == 3);
}

Verdict analyze(const DensityMatrix& rho) {
  require_bipartite(rho.dims());
  Verdict v{VerdictStatus::Undecided,
            {ppt_criterion(rho), reduction_criterion(rho), majorization_criterion(rho)},
            rho.dims()};
  if (ppt_is_sufficient(rho.dims())) {
    v.status = v.basis[0].satisfied ? VerdictStatus::Separable : VerdictStatus::Entangled;
  } else if (std::any_of(v.basis.begin(), v.basis.end(), [](const auto& r) { return !r.satisfied; })) {
    v.status = VerdictStatus::Entangled;
  }
  return v;
}

}  // namespace entangle
