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

#include "support/oracles.hpp"
#include "torus_ppt/error.hpp"
#include "torus_ppt/families.hpp"
#include "torus_ppt/random.hpp"
#include "torus_ppt/states.hpp"

namespace torus_ppt {
namespace {

RealMatrix uniform_c(int d, double value) {
  RealMatrix c(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i != j) c(i, j) = value;
  return c;
}

DenseMatrix diag(std::vector<double> v) {
  DenseMatrix m(v.size(), v.size());
  for (std::size_t k = 0; k < v.size(); ++k) m(k, k) = v[k];
  return m;
}

TEST(States, ConstructorValidation) {
  EXPECT_THROW(IsotropicLikeState(1, DenseMatrix(1, 1), RealMatrix(1)), Error);
  EXPECT_THROW(IsotropicLikeState(2, DenseMatrix(2, 2, {0.0, 1.0, 0.0, 0.0}), RealMatrix(2)), Error);
  RealMatrix bad(2);
  bad(0, 0) = 1.0;
  EXPECT_THROW(IsotropicLikeState(2, DenseMatrix(2, 2), bad), Error);
  EXPECT_THROW(WernerLikeState(3, DenseMatrix(2, 2), RealMatrix(3)), Error);
}

TEST(States, ToDensityExamples) {
  const IsotropicLikeState pure(2, diag({1.0, 0.0}), RealMatrix(2));
  DenseMatrix expected(4, 4);
  expected(0, 0) = 1.0;
  EXPECT_EQ(to_density(pure), expected);

  const DenseMatrix bell = to_density(isotropic(2, 1.0));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) EXPECT_NEAR(std::abs(bell(ket(i, i, 2), ket(j, j, 2)) - 0.5), 0.0, 1e-16);
  EXPECT_NEAR(frobenius(bell - testing::isotropic_dense(2, 1.0)), 0.0, 1e-15);

  // werner(2, 0) is Q+/3: the (|11>,|22>) sector carries 1/3 on the diagonal,
  // and |12>,|21> carry 1/6 with 1/6 coherence.
  const DenseMatrix q = to_density(werner(2, 0.0));
  EXPECT_NEAR(q(0, 0).real(), 1.0 / 3, 1e-16);
  EXPECT_NEAR(q(3, 3).real(), 1.0 / 3, 1e-16);
  EXPECT_NEAR(q(1, 1).real(), 1.0 / 6, 1e-16);
  EXPECT_NEAR(q(1, 2).real(), 1.0 / 6, 1e-16);
}

TEST(States, FamiliesMatchFirstPrinciplesDensities) {
  for (int d = 2; d <= 4; ++d) {
    for (double p : {0.0, 0.3, 0.5, 0.8, 1.0}) {
      EXPECT_LT(testing::max_abs_diff(to_density(werner(d, p)), testing::werner_dense(d, p)), 1e-15);
    }
    for (double l : {-0.1, 0.0, 0.25, 1.0}) {
      EXPECT_LT(testing::max_abs_diff(to_density(isotropic(d, l)), testing::isotropic_dense(d, l)), 1e-15);
    }
  }
}

TEST(States, ProjectExamples) {
  const DenseMatrix mixed = Complex(0.25) * DenseMatrix::identity(4);
  const auto iso = project_isotropic(mixed, 2);
  EXPECT_EQ(iso.a(), diag({0.25, 0.25}));
  EXPECT_EQ(iso.c()(0, 1), 0.25);
  EXPECT_EQ(iso.c()(1, 0), 0.25);
  const auto w = project_werner(mixed, 2);
  EXPECT_EQ(w.b(), diag({0.25, 0.25}));
  EXPECT_EQ(w.c()(0, 1), 0.25);

  const auto h = horodecki_sigma(3.0);
  EXPECT_EQ(project_isotropic(to_density(h), 3), h);
  EXPECT_EQ(project_isotropic(to_density(h), 3).a()(0, 1).real(), 2.0 / 21);

  const auto wer = werner(3, 0.4);
  EXPECT_EQ(project_werner(to_density(wer), 3), wer);

  const auto bs = project_werner(to_density(ha_bs(3, 2.0)), 3);
  for (int i = 0; i < 3; ++i) {
    const int n = (i + 1) % 3;
    EXPECT_EQ(bs.b()(i, i), Complex(1.0));
    EXPECT_EQ(bs.b()(i, n), Complex(1.0));
    EXPECT_EQ(bs.b()(n, i), Complex(1.0));
    EXPECT_EQ(bs.c()(i, n), 4.0);
    EXPECT_EQ(bs.c()(n, i), 0.25);
  }
  EXPECT_THROW(project_isotropic(DenseMatrix::identity(9), 2), Error);
}

TEST(States, HorodeckiRhoProjection) {
  const double a = 0.5;
  const double alpha = 1.0 / (8 * a + 1);
  const auto s = project_isotropic(horodecki_rho_a(a), 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      EXPECT_NEAR(std::abs(s.a()(i, j) - alpha * a), 0.0, 1e-16);
      if (i != j) EXPECT_NEAR(s.c()(i, j), alpha * a, 1e-16);
    }
  }
  EXPECT_LE(frobenius(to_density(s) - horodecki_rho_a_prime(a)), 1e-12);
  EXPECT_FALSE(check_torus_invariance(horodecki_rho_a(a), 3, Invariance::kUUStar, 4, 1));
  EXPECT_TRUE(check_torus_invariance(horodecki_rho_a(1.0), 3, Invariance::kUUStar, 4, 1));
  EXPECT_LE(frobenius(to_density(project_isotropic(horodecki_rho_a(1.0), 3)) - horodecki_rho_a(1.0)), 1e-15);
}

TEST(States, CheckExamples) {
  EXPECT_TRUE(check_positive(IsotropicLikeState(2, diag({1.0, 1.0}), RealMatrix(2))).verdict);

  const auto boundary = check_ppt(isotropic(3, 0.25));
  EXPECT_TRUE(boundary.verdict);
  EXPECT_NEAR(boundary.find("pair[1,2]")->value, 0.0, 1e-17);

  const auto bell = check_ppt(isotropic(2, 1.0));
  EXPECT_FALSE(bell.verdict);
  EXPECT_NEAR(bell.find("pair[1,2]")->value, -0.25, 1e-15);

  const double r = 1.0 / std::sqrt(3.0);
  const auto lv = check_ppt(lambda_vector({r, r, r}));
  EXPECT_TRUE(lv.verdict);
  for (const auto& s : lv.slacks)
    if (s.label.rfind("pair", 0) == 0) EXPECT_EQ(s.value, 0.0) << s.label;

  EXPECT_FALSE(check_ppt(werner(3, 0.6)).verdict);
  EXPECT_TRUE(check_positive(werner(3, 0.6)).verdict);
}

TEST(States, TraceAndNormalize) {
  const auto h = ha_gamma(3, 1.0);
  EXPECT_DOUBLE_EQ(state_trace(h), 9.0);
  const auto n = normalize(h);
  EXPECT_NEAR(n.a()(0, 1).real(), 1.0 / 9, 1e-16);
  EXPECT_NEAR(n.c()(1, 0), 1.0 / 9, 1e-16);
  for (int d = 2; d <= 4; ++d)
    for (double l : {-0.05, 0.3, 1.0}) EXPECT_NEAR(state_trace(isotropic(d, l)), 1.0, 1e-15);
  EXPECT_THROW(normalize(IsotropicLikeState(2, DenseMatrix(2, 2), RealMatrix(2))), Error);
}

TEST(States, XBlocks) {
  const auto blocks = x_blocks(horodecki_sigma(4.0));
  ASSERT_EQ(blocks.size(), 3u);
  const auto& b = blocks[0].block;
  EXPECT_NEAR(b(0, 0).real(), 4.0 / 21, 1e-16);
  EXPECT_NEAR(b(0, 1).real(), 2.0 / 21, 1e-16);
  EXPECT_NEAR(b(1, 1).real(), 1.0 / 21, 1e-16);
  EXPECT_NEAR((b(0, 0) * b(1, 1) - b(0, 1) * b(1, 0)).real(), 0.0, 1e-17);

  const auto zero = x_blocks(IsotropicLikeState(2, DenseMatrix(2, 2), uniform_c(2, 0.3)));
  EXPECT_EQ(zero[0].block(0, 1), Complex(0.0));
  EXPECT_EQ(zero[0].block(1, 1), Complex(0.3));

  for (const auto& pb : x_blocks(stormer(3, {2.0, 2.0, 2.0}, 1.0))) {
    EXPECT_EQ((pb.block(0, 0) * pb.block(1, 1)).real() - 1.0, 0.0);
  }
}

TEST(States, XBlocksAgreeWithCheckPpt) {
  Rng rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const auto s = random_isotropic_like(2 + trial % 3, rng);
    bool blocks_psd = true;
    for (const auto& pb : x_blocks(s)) blocks_psd = blocks_psd && is_psd(pb.block, 1e-9).psd;
    for (int i = 0; i < s.d(); ++i) blocks_psd = blocks_psd && s.a()(i, i).real() >= -1e-9 * parameter_scale(s);
    EXPECT_EQ(blocks_psd, check_ppt(s).verdict) << trial;
  }
}

TEST(States, TorusInvariance) {
  Rng rng(4);
  for (int d = 2; d <= 4; ++d) {
    EXPECT_TRUE(check_torus_invariance(to_density(random_isotropic_like(d, rng)), d, Invariance::kUUStar, 5, 9));
    EXPECT_TRUE(check_torus_invariance(to_density(random_werner_like(d, rng)), d, Invariance::kUU, 5, 9));
  }
  EXPECT_FALSE(check_torus_invariance(to_density(werner(3, 0.3)), 3, Invariance::kUUStar, 5, 9));
}

TEST(States, PartialTransposeSymbolicMatchesDense) {
  Rng rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 2 + trial % 3;
    const auto s = random_isotropic_like(d, rng);
    EXPECT_EQ(to_density(partial_transpose_symbolic(s)), partial_transpose_dense(to_density(s), d));
    const auto w = random_werner_like(d, rng);
    EXPECT_EQ(to_density(partial_transpose_symbolic(w)), partial_transpose_dense(to_density(w), d));
  }
}

// Oracle equivalence on 500 draws per class, plus duality at the slack level.
TEST(States, OracleEquivalenceAndDuality) {
  Rng rng(2718);
  int pos_true = 0;
  int ppt_true = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int d = 2 + trial % 3;
    const ClassState states[2] = {random_isotropic_like(d, rng), random_werner_like(d, rng)};
    for (const auto& s : states) {
      const auto pos = check_positive(s);
      const auto ppt = check_ppt(s);
      const DenseMatrix rho = to_density(s);
      const double scale = std::max(1.0, frobenius(rho));
      const double m = testing::eigen_min(rho);
      const double mpt = testing::eigen_min(testing::naive_partial_transpose(rho, d));
      if (std::abs(pos.min_slack()) > 1e-8 && std::abs(m) > 1e-8) EXPECT_EQ(pos.verdict, m >= -1e-9 * scale);
      if (std::abs(ppt.min_slack()) > 1e-8 && std::abs(mpt) > 1e-8) EXPECT_EQ(ppt.verdict, mpt >= -1e-9 * scale);
      pos_true += pos.verdict;
      ppt_true += ppt.verdict;

      const auto dual = check_positive(partial_transpose_symbolic(s));
      EXPECT_EQ(dual.verdict, ppt.verdict);
      ASSERT_EQ(dual.slacks.size(), ppt.slacks.size());
      for (std::size_t k = 0; k < dual.slacks.size(); ++k) EXPECT_EQ(dual.slacks[k].value, ppt.slacks[k].value);
    }
  }
  // The generator should exercise both verdicts.
  EXPECT_GT(pos_true, 100);
  EXPECT_LT(pos_true, 900);
  EXPECT_GT(ppt_true, 100);
  EXPECT_LT(ppt_true, 900);
}

TEST(States, ProjectorIdempotenceAndTrace) {
  Rng rng(31);
  std::mt19937_64 raw(31);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 2 + trial % 3;
    const auto s = random_isotropic_like(d, rng);
    EXPECT_EQ(project_isotropic(to_density(s), d), s);
    const auto w = random_werner_like(d, rng);
    EXPECT_EQ(project_werner(to_density(w), d), w);
    const DenseMatrix sigma = testing::random_hermitian_matrix(d * d, raw);
    EXPECT_NEAR(state_trace(project_isotropic(sigma, d)), trace(sigma).real(), 1e-12);
    EXPECT_NEAR(state_trace(project_werner(sigma, d)), trace(sigma).real(), 1e-12);
  }
}

}  // namespace
}  // namespace torus_ppt
