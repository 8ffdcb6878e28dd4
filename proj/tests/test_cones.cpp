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
#include "torus_ppt/cones.hpp"
#include "torus_ppt/error.hpp"
#include "torus_ppt/families.hpp"
#include "torus_ppt/random.hpp"
#include "torus_ppt/states.hpp"

namespace torus_ppt {
namespace {

std::vector<Complex> e(int k, int d) {
  std::vector<Complex> v(static_cast<std::size_t>(d));
  v[static_cast<std::size_t>(k)] = 1.0;
  return v;
}

IsotropicLikeState mix(const IsotropicLikeState& x, const IsotropicLikeState& y, double t) {
  return project_isotropic(Complex(t) * to_density(x) + Complex(1 - t) * to_density(y), x.d());
}

void expect_sound(const DecompositionCertificate& cert, const DenseMatrix& target) {
  const auto check = verify_certificate(cert, target, 1e-10 * std::max(1.0, frobenius(target)));
  EXPECT_TRUE(check.ok) << "residual " << check.residual;
  EXPECT_LE(check.max_rank, max_schmidt_rank(cert.claim));
  for (const auto& t : cert.terms) {
    EXPECT_GT(t.weight, 0.0);
    EXPECT_EQ(t.schmidt_rank, schmidt_rank(t.vector, cert.d, 1e-9));
  }
}

TEST(Cones, ClaimNames) {
  EXPECT_STREQ(to_string(ConeClaim::kVUpper2), "V_UPPER_2");
  EXPECT_EQ(cone_claim_from_string("SEPARABLE"), ConeClaim::kSeparable);
  EXPECT_THROW(cone_claim_from_string("V3"), Error);
}

TEST(Cones, SeparableFromProductExamples) {
  const auto pure = separable_from_product({e(0, 3), e(0, 3)});
  DenseMatrix p(9, 9);
  p(0, 0) = 1.0;
  EXPECT_EQ(to_density(pure), p);

  const double h = 1.0 / std::sqrt(2.0);
  const auto flat = separable_from_product({{h, h}, {h, h}});
  EXPECT_NEAR(flat.a()(0, 1).real(), 0.25, 1e-15);
  EXPECT_NEAR(flat.c()(0, 1), 0.25, 1e-15);
  EXPECT_NEAR(check_ppt(flat).find("pair[1,2]")->value, 0.0, 1e-15);
}

TEST(Cones, GeneratorsMatchProjectorOracle) {
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 2 + trial % 3;
    const auto p = random_product_pair(d, rng);
    const auto s = separable_from_product(p);
    const auto oracle = project_isotropic(outer(p.product()), d);
    EXPECT_LT(frobenius(to_density(s) - to_density(oracle)), 1e-14);
    EXPECT_GE(check_positive(s).min_slack(), -1e-12);
    EXPECT_GE(check_ppt(s).min_slack(), -1e-12);

    const auto q = random_quadruple(d, rng);
    const auto v2 = v2_candidate(q);
    const auto v2_oracle = project_isotropic(Complex(0.5) * outer(q.combined()), d);
    EXPECT_LT(frobenius(to_density(v2) - to_density(v2_oracle)), 1e-14);
  }
}

TEST(Cones, V2CandidateExamples) {
  const ProductVectorPair p{{0.6, Complex(0, 0.8)}, {1.0, 0.0}};
  const SchmidtTwoQuadruple degenerate{p.alpha, p.beta, p.alpha, p.beta};
  EXPECT_LT(frobenius(to_density(v2_candidate(degenerate)) - Complex(2.0) * to_density(separable_from_product(p))),
            1e-15);
  const SchmidtTwoQuadruple bell{e(0, 2), e(0, 2), e(1, 2), e(1, 2)};
  EXPECT_EQ(schmidt_rank(bell.combined(), 2, 1e-9), 2);
  const auto s = v2_candidate(bell);
  EXPECT_NEAR(s.a()(0, 1).real(), 0.5, 1e-16);
  EXPECT_NEAR(s.a()(0, 0).real(), 0.5, 1e-16);
}

TEST(Cones, TorusOrbitAveragesToProjection) {
  Rng rng(23);
  for (int d = 2; d <= 4; ++d) {
    const auto v = random_unit_vector(d * d, rng);
    const auto orbit = torus_orbit(v, d);
    EXPECT_EQ(orbit.size(), static_cast<std::size_t>(std::pow(3, d - 1)));
    DenseMatrix avg(static_cast<std::size_t>(d * d), static_cast<std::size_t>(d * d));
    for (const auto& w : orbit) avg += Complex(1.0 / orbit.size()) * outer(w);
    EXPECT_LT(frobenius(avg - to_density(project_isotropic(outer(v), d))), 1e-14);
  }
}

TEST(Cones, VUpper2Examples) {
  const double h = 1.0 / std::sqrt(2.0);
  const auto lv = v_upper2_certificate(lambda_vector({h, h}));
  EXPECT_EQ(lv.terms.size(), 3u);
  const auto iso = isotropic(3, 0.2);
  const auto cert = v_upper2_certificate(iso);
  EXPECT_EQ(cert.terms.size(), 9u);
  EXPECT_LE(cert.residual, 1e-12);
  expect_sound(cert, partial_transpose_dense(to_density(iso), 3));
  EXPECT_THROW(v_upper2_certificate(isotropic(2, 1.0)), Error);
}

TEST(Cones, V2WernerExamples) {
  const auto w = werner(3, 0.3);
  const auto cert = v2_certificate_werner(w);
  EXPECT_EQ(cert.terms.size(), 9u);
  expect_sound(cert, to_density(w));
  const auto bs = ha_bs(3, 2.0);
  expect_sound(v2_certificate_werner(bs), to_density(bs));
  EXPECT_THROW(v2_certificate_werner(werner(3, 1.2)), Error);
}

TEST(Cones, CertificatesOnRandomStates) {
  Rng rng(1234);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 2 + trial % 3;
    const auto s = random_ppt_isotropic_like(d, rng);
    expect_sound(v_upper2_certificate(s), partial_transpose_dense(to_density(s), d));
    const auto w = random_positive_werner_like(d, rng);
    expect_sound(v2_certificate_werner(w), to_density(w));
  }
}

TEST(Cones, RealParametersLayout) {
  const auto s = isotropic(3, 0.5);
  const auto p = real_parameters(s);
  EXPECT_EQ(p.size(), 15u);
  EXPECT_NEAR(p[0], s.a()(0, 0).real(), 0);
  EXPECT_NEAR(p[3], s.a()(0, 1).real(), 0);
  EXPECT_NEAR(p.back(), s.c()(2, 1), 0);
}

TEST(Cones, MaximallyMixedIsCertifiedSeparable) {
  for (int d = 2; d <= 3; ++d) {
    const auto s = project_isotropic(Complex(1.0 / (d * d)) * DenseMatrix::identity(d * d), d);
    SearchOptions opts;
    opts.n_samples = 200;
    const auto cert = separability_search(s, opts);
    ASSERT_TRUE(cert.has_value()) << d;
    EXPECT_LE(cert->residual, 1e-6);
    expect_sound(*cert, to_density(s));
  }
}

TEST(Cones, BellStateNeverCertified) {
  for (std::uint64_t seed : {0u, 1u, 2u}) {
    SearchOptions opts;
    opts.seed = seed;
    EXPECT_FALSE(separability_search(isotropic(2, 1.0), opts).has_value());
    EXPECT_FALSE(separability_search(isotropic(3, 0.5), opts).has_value());
  }
  EXPECT_THROW(separability_search(ha_gamma(3, 1.0), SearchOptions{}), Error);
}

TEST(Cones, PlantAndRecover) {
  Rng rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    const int d = 2 + trial % 3;
    const auto p = random_product_pair(d, rng);
    const auto q = random_product_pair(d, rng);
    const auto target = mix(separable_from_product(p), separable_from_product(q), 0.5);
    SearchOptions opts;
    opts.seed = static_cast<std::uint64_t>(trial);
    const auto cert = separability_search(target, opts, {p, q});
    ASSERT_TRUE(cert.has_value()) << trial;
    EXPECT_LE(cert->residual, 1e-6);
    expect_sound(*cert, to_density(target));
  }
}

TEST(Cones, SearchIsDeterministicAcrossExecution) {
  const auto s = isotropic(3, 0.1);
  SearchOptions par;
  par.seed = 7;
  SearchOptions ser = par;
  ser.execution = Execution::kSerial;
  const auto a = separability_search(s, par);
  const auto b = separability_search(s, ser);
  const auto c = separability_search(s, par);
  ASSERT_EQ(a.has_value(), b.has_value());
  ASSERT_EQ(a.has_value(), c.has_value());
  if (a) {
    EXPECT_EQ(a->reconstruct(), b->reconstruct());
    EXPECT_EQ(a->reconstruct(), c->reconstruct());
  }
  Rng r1(3);
  Rng r2(3);
  std::vector<ProductVectorPair> gens;
  for (int k = 0; k < 64; ++k) gens.push_back(random_product_pair(3, r1));
  const auto cp = product_columns(gens, 3, Execution::kParallel);
  const auto cs = product_columns(gens, 3, Execution::kSerial);
  EXPECT_TRUE(std::equal(cp.data().begin(), cp.data().end(), cs.data().begin()));
  (void)r2;
}

TEST(Cones, V2SearchFindsEntangledSchmidtTwoState) {
  // isotropic(3, lambda) has Schmidt number <= 2 iff lambda <= 5/8. At 0.4 it
  // is NPT, so rank-2 generators reach it while product generators cannot.
  const auto s = isotropic(3, 0.4);
  SearchOptions opts;
  opts.n_samples = 1500;
  const auto v2 = v2_search(s, opts);
  ASSERT_TRUE(v2.has_value());
  expect_sound(*v2, to_density(s));
  EXPECT_FALSE(separability_search(s, opts).has_value());
  EXPECT_FALSE(v2_search(isotropic(3, 0.7), opts).has_value());
}

TEST(Cones, VerifyCertificateRejectsTampering) {
  auto cert = v2_certificate_werner(werner(3, 0.3));
  const DenseMatrix target = to_density(werner(3, 0.3));
  EXPECT_TRUE(verify_certificate(cert, target, 1e-10).ok);
  cert.terms.front().weight *= 1.01;
  EXPECT_FALSE(verify_certificate(cert, target, 1e-10).ok);
  cert = v2_certificate_werner(werner(3, 0.3));
  cert.claim = ConeClaim::kSeparable;
  EXPECT_FALSE(verify_certificate(cert, target, 1e-10).ok);
}

}  // namespace
}  // namespace torus_ppt
