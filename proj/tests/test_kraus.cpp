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

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "randphase/builtins.hpp"
#include "randphase/channels.hpp"
#include "randphase/dynamics.hpp"
#include "randphase/errors.hpp"
#include "randphase/kraus.hpp"
#include "test_support.hpp"

using namespace randphase;
using namespace randphase::testing;
using Catch::Matchers::WithinAbs;

TEST_CASE("one-dimensional Kraus set", "[kraus]") {
  const auto set = discrete_kraus(UnitaryMatrix(Matrix::Identity(1, 1)));
  REQUIRE(set.operators.size() == 2);
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(set.operators[0].matrix(0, 0) - Complex(0, -r)) < 1e-15);
  CHECK(std::abs(set.operators[1].matrix(0, 0) - Complex(0, r)) < 1e-15);
  CHECK(superoperator_distance(to_channel(set), Channel::identity(1)) < 1e-15);
}

TEST_CASE("identity Kraus set dephases", "[kraus]") {
  const auto set = discrete_kraus(UnitaryMatrix(Matrix::Identity(2, 2)));
  REQUIRE(set.operators.size() == 4);
  const auto c = to_channel(set);
  CHECK(c.origin().kind == Provenance::kDiscreteKraus);
  for (std::uint64_t s = 0; s < 5; ++s) {
    const Matrix rho = random_state(2, s);
    Matrix expected = Matrix::Zero(2, 2);
    expected.diagonal() = rho.diagonal();
    CHECK((apply_channel(c, rho) - expected).norm() < 1e-13);
  }
  CHECK(verify_discretization(UnitaryMatrix(Matrix::Identity(2, 2))) <= 1e-13);
}

TEST_CASE("pattern bits select the phases", "[kraus]") {
  const Matrix u = gram_schmidt_unitary(3, 4);
  const auto set = discrete_kraus(UnitaryMatrix(u));
  REQUIRE(set.operators.size() == 8);
  for (std::uint32_t p = 0; p < 8; ++p) {
    CHECK(set.operators[p].pattern == p);
    Matrix expected = u / std::sqrt(8.0);
    for (int j = 0; j < 3; ++j) expected.col(j) *= Complex(0, (p >> j) & 1 ? 1.0 : -1.0);
    CHECK((set.operators[p].matrix - expected).norm() < 1e-15);
  }
}

TEST_CASE("Kraus sets are complete with the right norms", "[kraus][property]") {
  for (std::size_t d = 1; d <= 6; ++d) {
    const auto set = discrete_kraus(UnitaryMatrix(gram_schmidt_unitary(d, 10 + d)));
    REQUIRE(set.operators.size() == (std::size_t(1) << d));
    std::vector<Matrix> ops;
    for (const auto& k : set.operators) {
      CHECK_THAT(hs_norm(k.matrix), WithinAbs(std::sqrt(double(d)) * std::pow(2.0, -0.5 * double(d)), 1e-14));
      ops.push_back(k.matrix);
    }
    CHECK(kraus_completeness_residual(ops) <= 1e-13);
    const auto check = is_bistochastic(to_channel(set));
    CHECK(check.unital_residual <= 1e-13);
    CHECK(check.trace_residual <= 1e-13);
  }
}

TEST_CASE("discretization residuals", "[kraus]") {
  CHECK(verify_discretization(UnitaryMatrix(gram_schmidt_unitary(4, 77))) <= 1e-12);
  const UnitaryMatrix hh(hadamard_power(2));
  CHECK(verify_discretization(hh) <= 1e-12);

  // The discrete channel also mixes the H (x) H model in two steps.
  const auto c = to_channel(discrete_kraus(hh));
  for (std::uint64_t s = 0; s < 5; ++s) {
    const Matrix rho = random_state(4, 80 + s);
    CHECK((apply_channel(c, apply_channel(c, rho)) - Matrix::Identity(4, 4) / 4.0).norm() <= 1e-12);
  }

  for (std::size_t d = 1; d <= 6; ++d)
    CHECK(verify_discretization(UnitaryMatrix(gram_schmidt_unitary(d, 90 + d))) <= 1e-12);
}

TEST_CASE("brute-force sum matches the closed form", "[kraus]") {
  const Matrix u = gram_schmidt_unitary(4, 5);
  Matrix s = Matrix::Zero(16, 16);
  for (int p = 0; p < 16; ++p) {
    Matrix k = u / 4.0;
    for (int j = 0; j < 4; ++j) k.col(j) *= std::exp(Complex(0, (p >> j) & 1 ? kPi / 2 : -kPi / 2));
    s += kron(k.conjugate(), k);
  }
  const auto mean = mean_channel(UnitaryMatrix(u), PhaseMeasure::uniform(-kPi, kPi));
  CHECK((s - mean.superoperator()).norm() <= 1e-12);
}

TEST_CASE("other two-point phase sets fail", "[kraus][property]") {
  // For U = I the off-diagonal weight is E[e^{i(theta_j - theta_l)}] = (1 + cos(a - b)) / 2
  // on two superoperator entries, so the residual is sqrt(2) (1 + cos(a - b)) / 2.
  const UnitaryMatrix id(Matrix::Identity(2, 2));
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  int tested = 0;
  while (tested < 40) {
    const double a = angle(rng), b = angle(rng);
    const double expected = std::sqrt(2.0) * (1.0 + std::cos(a - b)) / 2.0;
    CHECK_THAT(verify_discretization(id, TwoPointPhases{a, b}), WithinAbs(expected, 1e-13));
    if (std::cos(a - b) > -0.98) {
      ++tested;
      CHECK(verify_discretization(id, TwoPointPhases{a, b}) > 0.01);
    }
  }
  CHECK(verify_discretization(id, TwoPointPhases{0.0, kPi / 4}) > 0.01);
  CHECK(verify_discretization(id, TwoPointPhases{0.0, kPi}) <= 1e-13);
}

TEST_CASE("residual ignores the order of the Kraus list", "[kraus][property]") {
  const UnitaryMatrix u(gram_schmidt_unitary(3, 6));
  auto set = discrete_kraus(u);
  const double base = discretization_residual(set, u);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 10; ++t) {
    std::shuffle(set.operators.begin(), set.operators.end(), rng);
    CHECK_THAT(discretization_residual(set, u), WithinAbs(base, 1e-13));
  }
}

TEST_CASE("Kraus capacity", "[kraus]") {
  CHECK_THROWS_AS(discrete_kraus(UnitaryMatrix(Matrix::Identity(11, 11))), CapacityError);
  CHECK(discrete_kraus(UnitaryMatrix(Matrix::Identity(kMaxKrausDimension, kMaxKrausDimension))).operators.size() ==
        1024);
}
