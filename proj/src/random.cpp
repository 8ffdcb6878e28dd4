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

#include "torus_ppt/random.hpp"

#include <cmath>

namespace torus_ppt {

namespace {

DenseMatrix shifted_hermitian(int d, Rng& rng) {
  DenseMatrix h = random_hermitian(d, rng);
  h *= 0.35;
  std::uniform_real_distribution<double> shift(-0.3, 0.15);
  const double lowest = hermitian_eigenvalues(h).front();
  const double target = shift(rng);  // smallest eigenvalue after the shift
  for (int i = 0; i < d; ++i) h(i, i) += target - lowest;
  return h;
}

RealMatrix random_populations(int d, Rng& rng) {
  std::uniform_real_distribution<double> u(-0.05, 1.0);
  RealMatrix c(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (i != j) c(i, j) = u(rng);
    }
  }
  return c;
}

// Populations with c_ij c_ji >= |m_ij|^2 and positive diagonal of m.
RealMatrix dominating_populations(DenseMatrix& m, Rng& rng) {
  const int d = static_cast<int>(m.rows());
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::uniform_real_distribution<double> slack(0.0, 0.5);
  RealMatrix c(d);
  for (int i = 0; i < d; ++i) {
    m(i, i) = std::abs(m(i, i).real());
    for (int j = i + 1; j < d; ++j) {
      c(i, j) = u(rng);
      c(j, i) = std::norm(m(i, j)) / c(i, j) * (1.0 + slack(rng)) + 1e-3 * slack(rng);
    }
  }
  return c;
}

}  // namespace

std::vector<Complex> random_unit_vector(int n, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<Complex> v(static_cast<std::size_t>(n));
  for (auto& x : v) x = {g(rng), g(rng)};
  const double len = norm2(v);
  for (auto& x : v) x /= len;
  return v;
}

DenseMatrix random_hermitian(int n, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  const auto nn = static_cast<std::size_t>(n);
  DenseMatrix h(nn, nn);
  for (std::size_t i = 0; i < nn; ++i) {
    h(i, i) = g(rng);
    for (std::size_t j = i + 1; j < nn; ++j) {
      h(i, j) = Complex(g(rng), g(rng)) / std::sqrt(2.0);
      h(j, i) = std::conj(h(i, j));
    }
  }
  return h;
}

IsotropicLikeState random_isotropic_like(int d, Rng& rng) {
  DenseMatrix a = shifted_hermitian(d, rng);
  return {d, std::move(a), random_populations(d, rng)};
}

WernerLikeState random_werner_like(int d, Rng& rng) {
  DenseMatrix b = shifted_hermitian(d, rng);
  return {d, std::move(b), random_populations(d, rng)};
}

IsotropicLikeState random_ppt_isotropic_like(int d, Rng& rng) {
  DenseMatrix a = random_hermitian(d, rng);
  a *= 0.35;
  RealMatrix c = dominating_populations(a, rng);
  return {d, std::move(a), std::move(c)};
}

WernerLikeState random_positive_werner_like(int d, Rng& rng) {
  DenseMatrix b = random_hermitian(d, rng);
  b *= 0.35;
  RealMatrix c = dominating_populations(b, rng);
  return {d, std::move(b), std::move(c)};
}

}  // namespace torus_ppt
