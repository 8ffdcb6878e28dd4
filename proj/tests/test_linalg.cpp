// Copyright 2026 The torus-ppt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "support/oracles.hpp"
#include "torus_ppt/error.hpp"
#include "torus_ppt/families.hpp"
#include "torus_ppt/linalg.hpp"
#include "torus_ppt/random.hpp"
#include "torus_ppt/states.hpp"

namespace torus_ppt {
namespace {

using testing::eigen_values;

TEST(Linalg, BasisIndexRoundTrip) {
  for (int d = 2; d <= 4; ++d) {
    for (std::size_t f = 0; f < static_cast<std::size_t>(d * d); ++f) {
      const auto b = BasisIndex::from_flat(f, d);
      EXPECT_EQ(BasisIndex::make(b.i, b.j, d).flat, f);
      EXPECT_GE(b.i, 1);
      EXPECT_LE(b.j, d);
    }
  }
  EXPECT_EQ(BasisIndex::make(2, 3, 3).flat, 5u);
}

TEST(Linalg, RejectsNonFinite) {
  EXPECT_THROW(DenseMatrix(1, 1, {Complex(std::nan(""), 0)}), Error);
  EXPECT_THROW(DenseMatrix(2, 2, {1.0, 2.0}), Error);
}

TEST(Linalg, ScalarAndPauliSpectra) {
  EXPECT_EQ(hermitian_eigenvalues(DenseMatrix(1, 1, {5.0})), std::vector<double>{5.0});
  const auto x = hermitian_eigenvalues(DenseMatrix(2, 2, {0.0, 1.0, 1.0, 0.0}));
  ASSERT_EQ(x.size(), 2u);
  EXPECT_NEAR(x[0], -1.0, 1e-15);
  EXPECT_NEAR(x[1], 1.0, 1e-15);
}

TEST(Linalg, WernerBHatHasTwoPointSpectrum) {
  const auto w = werner(3, 0.3);
  const double xp = 0.7 / 12.0 + 0.3 / 6.0;
  const double xm = 0.7 / 12.0 - 0.3 / 6.0;
  const auto ev = hermitian_eigenvalues(w.b());
  // b-hat = x- J + x+ I: x+ twice, 3 x- + x+ once.
  std::vector<double> expected{xp, xp, 3 * xm + xp};
  std::sort(expected.begin(), expected.end());
  for (int k = 0; k < 3; ++k) EXPECT_NEAR(ev[k], expected[k], 1e-15);
}

TEST(Linalg, IsPsdExamples) {
  const auto zero = is_psd(DenseMatrix(3, 3), 1e-9);
  EXPECT_TRUE(zero.psd);
  EXPECT_EQ(zero.min_eigenvalue, 0.0);
  const auto neg = is_psd(DenseMatrix(2, 2, {1.0, 0.0, 0.0, -0.5}), 1e-9);
  EXPECT_FALSE(neg.psd);
  EXPECT_NEAR(neg.min_eigenvalue, -0.5, 1e-15);
  const auto proj = is_psd(to_density(isotropic(3, 1.0)), 1e-9);
  EXPECT_TRUE(proj.psd);
  EXPECT_GE(proj.min_eigenvalue, -1e-9);
  EXPECT_THROW(is_psd(DenseMatrix(2, 2, {0.0, 1.0, 0.0, 0.0}), 1e-9), Error);
}

TEST(Linalg, JacobiMatchesEigenOnRandomHermitian) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 15;
    const DenseMatrix m = testing::random_hermitian_matrix(n, rng);
    const auto mine = hermitian_eigenvalues(m);
    const auto ref = eigen_values(m);
    for (int k = 0; k < n; ++k) EXPECT_NEAR(mine[k], ref[k], 1e-11 * std::max(1.0, frobenius(m)));
  }
}

TEST(Linalg, EigenvectorsDiagonalize) {
  std::mt19937_64 rng(3);
  const DenseMatrix m = testing::random_hermitian_matrix(9, rng);
  const auto es = hermitian_eigensystem(m);
  const DenseMatrix recon = es.vectors * [&] {
    DenseMatrix d(9, 9);
    for (std::size_t k = 0; k < 9; ++k) d(k, k) = es.values[k];
    return d;
  }() * adjoint(es.vectors);
  EXPECT_LT(testing::max_abs_diff(recon, m), 1e-12 * frobenius(m));
  EXPECT_LT(testing::max_abs_diff(adjoint(es.vectors) * es.vectors, DenseMatrix::identity(9)), 1e-13);
}

TEST(Linalg, TraceAndFrobeniusProperty) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + trial % 15;
    const DenseMatrix m = testing::random_hermitian_matrix(n, rng);
    const auto ev = hermitian_eigenvalues(m);
    double sum = 0.0;
    double sq = 0.0;
    for (double x : ev) {
      sum += x;
      sq += x * x;
    }
    const double tr = trace(m).real();
    const double f2 = frobenius(m) * frobenius(m);
    EXPECT_NEAR(sum, tr, 1e-10 * std::max(1.0, std::abs(tr)));
    EXPECT_NEAR(sq, f2, 1e-10 * std::max(1.0, f2));
  }
}

TEST(Linalg, PartialTransposeExamples) {
  EXPECT_EQ(partial_transpose_dense(DenseMatrix::identity(4), 2), DenseMatrix::identity(4));
  const auto ev = eigen_values(partial_transpose_dense(to_density(isotropic(2, 1.0)), 2));
  const std::vector<double> expected{-0.5, 0.5, 0.5, 0.5};
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(ev[k], expected[k], 1e-15);
}

TEST(Linalg, PartialTransposeProperties) {
  std::mt19937_64 rng(5);
  for (int d = 2; d <= 4; ++d) {
    for (int trial = 0; trial < 20; ++trial) {
      const DenseMatrix m = testing::random_hermitian_matrix(d * d, rng);
      const DenseMatrix pt = partial_transpose_dense(m, d);
      EXPECT_EQ(pt, testing::naive_partial_transpose(m, d));
      EXPECT_EQ(partial_transpose_dense(pt, d), m);
      EXPECT_EQ(trace(pt), trace(m));
    }
  }
  EXPECT_THROW(partial_transpose_dense(DenseMatrix::identity(5), 2), Error);
}

TEST(Linalg, SchmidtRankExamples) {
  EXPECT_EQ(schmidt_rank(testing::basis_ket(0, 0, 3), 3, 1e-9), 1);
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_EQ(schmidt_rank(testing::add(testing::basis_ket(0, 1, 2, r), testing::basis_ket(1, 0, 2, r)), 2, 1e-9), 2);
  for (int d = 2; d <= 4; ++d) {
    std::vector<Complex> phi(static_cast<std::size_t>(d * d));
    for (int i = 0; i < d; ++i) phi[ket(i, i, d)] = 1.0 / std::sqrt(double(d));
    EXPECT_EQ(schmidt_rank(phi, d, 1e-9), d);
  }
  EXPECT_THROW(schmidt_rank(std::vector<Complex>(4), 2, 1e-9), Error);
}

TEST(Linalg, SchmidtRankInvariantUnderPhaseAndScale) {
  Rng rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const int d = 2 + trial % 3;
    const auto a = random_unit_vector(d, rng);
    const auto b = random_unit_vector(d, rng);
    const auto c = random_unit_vector(d, rng);
    const auto e = random_unit_vector(d, rng);
    const auto v = testing::add(kron(a, b), kron(c, e));
    const int k = schmidt_rank(v, d, 1e-9);
    EXPECT_EQ(k, 2);
    auto w = v;
    const Complex phase = std::polar(3.7, 0.3 * trial);
    for (auto& x : w) x *= phase;
    EXPECT_EQ(schmidt_rank(w, d, 1e-9), k);
    EXPECT_EQ(schmidt_rank(kron(a, b), d, 1e-9), 1);
  }
}

TEST(Linalg, SchmidtCoefficientsResolveTinyComponents) {
  // 1e-7 on the second Schmidt component would vanish through a Gram matrix.
  auto v = testing::add(testing::basis_ket(0, 0, 2), testing::basis_ket(1, 1, 2, 1e-7));
  const auto s = schmidt_coefficients(v, 2);
  EXPECT_NEAR(s.back(), 1e-7, 1e-20);
}

}  // namespace
}  // namespace torus_ppt
