// Copyright 2026 The randphase Authors
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

#include "randphase/random.hpp"

#include <cmath>
#include <numbers>

namespace randphase {

double standard_normal(Rng& rng) {
  // 1 - u keeps the logarithm argument in (0, 1].
  const double u1 = 1.0 - uniform01(rng);
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex complex_normal(Rng& rng) {
  const double re = standard_normal(rng);
  const double im = standard_normal(rng);
  return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

ComplexMatrix haar_unitary(std::size_t d, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  const auto n = static_cast<Eigen::Index>(d);
  ComplexMatrix g(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) g(i, j) = complex_normal(rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < n; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

ComplexMatrix random_density(std::size_t d, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  const auto n = static_cast<Eigen::Index>(d);
  ComplexMatrix g(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) g(i, j) = complex_normal(rng);
  ComplexMatrix rho = g * g.adjoint();
  rho = 0.5 * (rho + rho.adjoint());
  return rho / rho.trace().real();
}

}  // namespace randphase
