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

#include <cmath>
#include <cstdio>

#include "entangle/separability.hpp"
#include "oracles.hpp"

namespace entangle {
namespace {

DensityMatrix product_projector(const Dims& dims, std::uint64_t seed) {
  const auto a = random_pure({dims[0]}, seed);
  const auto b = random_pure({dims[1]}, seed + 1000003);
  return DensityMatrix(ComplexMatrix::projector(tensor(a.vector(), b.vector())), dims);
}

DensityMatrix maximally_mixed(std::size_t n, const Dims& dims) {
  return DensityMatrix(ComplexMatrix::identity(n) * Complex(1.0 / static_cast<double>(n)), dims);
}

DensityMatrix random_mixed(const Dims& dims, std::uint64_t seed) {
  const std::size_t n = total_dimension(dims);
  return random_density(dims, 1 + seed % n, seed);
}

TEST(Schmidt, ProductState) {
  const auto s = schmidt_decompose(basis_state({2, 2}, 0));
  ASSERT_EQ(s.rank(), 1u);
  EXPECT_NEAR(s.coefficients[0], 1.0, 1e-14);
}

TEST(Schmidt, BellState) {
  const auto s = schmidt_decompose(bell(BellKind::PhiPlus));
  ASSERT_EQ(s.rank(), 2u);
  EXPECT_NEAR(s.coefficients[0], 1.0 / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(s.coefficients[1], 1.0 / std::sqrt(2.0), 1e-12);
}

TEST(Schmidt, MatchesReducedSpectrumAndReconstructs) {
  for (const Dims& dims : {Dims{3, 3}, Dims{4, 4}, Dims{2, 4}}) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const auto psi = random_pure(dims, seed);
      const auto s = schmidt_decompose(psi);
      const auto red = oracle::eigen_eigenvalues(partial_trace(ComplexMatrix::projector(psi.vector()), dims, 0));
      ASSERT_EQ(s.rank(), std::min(dims[0], dims[1]));
      for (std::size_t i = 0; i < s.rank(); ++i)
        EXPECT_NEAR(s.coefficients[i] * s.coefficients[i], red[red.size() - 1 - i], 1e-10);

      ComplexVector rebuilt(psi.vector().size(), Complex(0.0));
      for (std::size_t i = 0; i < s.rank(); ++i) {
        const auto term = tensor(s.left_basis[i], s.right_basis[i]);
        for (std::size_t k = 0; k < term.size(); ++k) rebuilt[k] += s.coefficients[i] * term[k];
      }
      const double overlap = std::abs(inner(rebuilt, psi.vector()));
      EXPECT_NEAR(overlap, 1.0, 1e-8);
      for (std::size_t i = 0; i < s.rank(); ++i)
        for (std::size_t j = 0; j < s.rank(); ++j) {
          const double expected = i == j ? 1.0 : 0.0;
          EXPECT_NEAR(std::abs(inner(s.left_basis[i], s.left_basis[j]) - expected), 0.0, 1e-10);
          EXPECT_NEAR(std::abs(inner(s.right_basis[i], s.right_basis[j]) - expected), 0.0, 1e-10);
        }
    }
  }
}

TEST(Schmidt, RankOneIffReducedIsPure) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto a = random_pure({3}, seed);
    const auto b = random_pure({3}, seed + 77);
    const PureState product(tensor(a.vector(), b.vector()), {3, 3});
    EXPECT_EQ(schmidt_decompose(product).rank(), 1u);
    EXPECT_GT(schmidt_decompose(random_pure({3, 3}, seed)).rank(), 1u);
  }
}

TEST(Schmidt, RejectsNonBipartite) { EXPECT_THROW(schmidt_decompose(ghz()), std::invalid_argument); }

TEST(Ppt, WernerMargins) {
  EXPECT_NEAR(ppt_criterion(werner(0.5)).margin, -0.125, 1e-12);
  EXPECT_FALSE(ppt_criterion(werner(0.5)).satisfied);
  const auto boundary = ppt_criterion(werner(1.0 / 3.0));
  EXPECT_NEAR(boundary.margin, 0.0, 1e-12);
  EXPECT_TRUE(boundary.satisfied);
  EXPECT_TRUE(boundary.boundary);
}

TEST(Ppt, WernerSpectrumMatchesOracle) {
  for (double p : {0.0, 0.2, 0.5, 0.77, 1.0}) {
    const auto ev = eigenvalues(partial_transpose(werner(p).matrix(), {2, 2}, 0));
    const auto expected = oracle::werner_partial_transpose_spectrum(p);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(ev[i], expected[i], 1e-12);
  }
}

TEST(Ppt, ProductStatesSatisfy) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) EXPECT_TRUE(ppt_criterion(product_projector({3, 4}, seed)).satisfied);
}

TEST(Reduction, WernerAndMaximallyMixed) {
  EXPECT_NEAR(reduction_criterion(werner(0.5)).margin, -0.125, 1e-12);
  const auto mixed = reduction_criterion(maximally_mixed(4, {2, 2}));
  EXPECT_TRUE(mixed.satisfied);
  EXPECT_NEAR(mixed.margin, 0.25, 1e-14);
}

TEST(Majorization, BellAndWerner) {
  const DensityMatrix bell_rho(bell(BellKind::PhiPlus));
  EXPECT_NEAR(majorization_criterion(bell_rho).margin, -0.5, 1e-12);
  for (double p : {0.1, 0.3, 0.34, 0.5, 0.9}) {
    const auto r = majorization_criterion(werner(p));
    EXPECT_EQ(r.satisfied, p <= 1.0 / 3.0) << p;
    if (p > 1.0 / 3.0) EXPECT_NEAR(r.margin, 0.5 - (1.0 + 3.0 * p) / 4.0, 1e-12);
  }
  EXPECT_TRUE(majorization_criterion(maximally_mixed(4, {2, 2})).satisfied);
}

TEST(Criteria, ConstructedSeparableStatesSatisfyAll) {
  for (const Dims& dims : {Dims{2, 2}, Dims{2, 3}, Dims{3, 3}, Dims{2, 4}}) {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
      const auto rho = random_separable(dims, 10, seed);
      EXPECT_TRUE(ppt_criterion(rho).satisfied);
      EXPECT_TRUE(reduction_criterion(rho).satisfied);
      EXPECT_TRUE(majorization_criterion(rho).satisfied);
    }
  }
}

void check_chain(const Dims& dims, std::size_t count, bool include_majorization) {
  std::size_t violations = 0;
  for (std::uint64_t seed = 0; seed < count; ++seed) {
    const auto rho = random_mixed(dims, seed);
    const bool ppt = ppt_criterion(rho).satisfied;
    const bool red = reduction_criterion(rho).satisfied;
    const bool maj = majorization_criterion(rho).satisfied;
    if (!red && ppt) ++violations;
    if (include_majorization && !maj && red) ++violations;
  }
  EXPECT_EQ(violations, 0u);
}

TEST(Criteria, ChainTwoByTwo) { check_chain({2, 2}, 1000, true); }
TEST(Criteria, ChainTwoByThree) { check_chain({2, 3}, 1000, true); }
TEST(Criteria, ChainThreeByThree) { check_chain({3, 3}, 1000, false); }

TEST(Criteria, ReductionToMajorizationFrequencyInHigherDimensions) {
  // Recorded only; the implication is not asserted here.
  std::size_t red_violated = 0, both = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto rho = random_mixed({3, 3}, seed);
    if (!reduction_criterion(rho).satisfied) {
      ++red_violated;
      both += !majorization_criterion(rho).satisfied;
    }
  }
  RecordProperty("reduction_violated", static_cast<int>(red_violated));
  RecordProperty("also_majorization_violated", static_cast<int>(both));
  SUCCEED();
}

TEST(Analyze, WernerVerdicts) {
  EXPECT_EQ(analyze(werner(0.2)).status, VerdictStatus::Separable);
  EXPECT_EQ(analyze(werner(0.9)).status, VerdictStatus::Entangled);
  EXPECT_EQ(analyze(werner(1.0 / 3.0)).status, VerdictStatus::Separable);
}

TEST(Analyze, QutritPptIsUndecided) {
  const auto rho = sym_antisym_family(3, 0.8);
  ASSERT_TRUE(ppt_criterion(rho).satisfied);
  EXPECT_EQ(analyze(rho).status, VerdictStatus::Undecided);
  EXPECT_EQ(analyze(sym_antisym_family(3, 0.1)).status, VerdictStatus::Entangled);
}

TEST(Analyze, LowDimensionVerdictFollowsPptSign) {
  for (const Dims& dims : {Dims{2, 2}, Dims{2, 3}, Dims{3, 2}}) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const auto rho = random_mixed(dims, seed);
      const auto v = analyze(rho);
      const bool ppt = ppt_criterion(rho).margin >= -kSignTol;
      EXPECT_EQ(v.status, ppt ? VerdictStatus::Separable : VerdictStatus::Entangled);
      EXPECT_EQ(v.basis.size(), 3u);
    }
  }
}

TEST(Analyze, EntangledOnlyWithAViolation) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto v = analyze(random_mixed({3, 3}, seed));
    bool any_violated = false;
    for (const auto& r : v.basis) any_violated |= !r.satisfied;
    EXPECT_EQ(v.status == VerdictStatus::Entangled, any_violated);
    EXPECT_NE(v.status, VerdictStatus::Separable);
  }
}

TEST(Analyze, RejectsNonBipartite) { EXPECT_THROW(analyze(DensityMatrix(ghz())), std::invalid_argument); }

}  // namespace
}  // namespace entangle
