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

#include <cmath>
#include <set>

#include "randphase/errors.hpp"
#include "randphase/measures.hpp"
#include "test_support.hpp"

using namespace randphase;
using namespace randphase::testing;
using Catch::Matchers::WithinAbs;

namespace {

// Composite Simpson rule for E[e^{i theta}] under the uniform density on [a, b].
Complex simpson_moment(double a, double b, int panels = 20000) {
  const double h = (b - a) / panels;
  Complex sum = std::exp(Complex(0, a)) + std::exp(Complex(0, b));
  for (int k = 1; k < panels; ++k) sum += (k % 2 ? 4.0 : 2.0) * std::exp(Complex(0, a + k * h));
  return sum * h / 3.0 / (b - a);
}

Complex empirical_moment(const PhaseVector& v) {
  Complex s = 0;
  for (double t : v.phases) s += std::exp(Complex(0, t));
  return s / static_cast<double>(v.size());
}

}  // namespace

TEST_CASE("first moment examples", "[measures]") {
  CHECK(std::abs(PhaseMeasure::uniform(-kPi, kPi).first_moment()) < 1e-15);
  CHECK(std::abs(PhaseMeasure::discrete({-kPi / 2, kPi / 2}).first_moment()) < 1e-15);
  const Complex m = PhaseMeasure::uniform(-kPi / 2, kPi / 2).first_moment();
  CHECK_THAT(m.real(), WithinAbs(2.0 / kPi, 1e-10));
  CHECK_THAT(m.imag(), WithinAbs(0.0, 1e-10));
}

TEST_CASE("first moment agrees with quadrature", "[measures]") {
  const std::pair<double, double> intervals[] = {
      {-kPi / 2, kPi / 2}, {0.0, 1.0}, {-1.0, 1.0}, {0.3, 5.0}, {-7.0, -2.5}, {-kPi, kPi}};
  for (auto [a, b] : intervals) {
    const Complex exact = PhaseMeasure::uniform(a, b).first_moment();
    CHECK(std::abs(exact - simpson_moment(a, b)) < 1e-10);
  }
}

TEST_CASE("circular variance examples", "[measures]") {
  CHECK(PhaseMeasure::point(0.7).circular_variance() == 0.0);
  CHECK_FALSE(PhaseMeasure::point(0.7).nondegenerate());
  CHECK_THAT(PhaseMeasure::uniform(-kPi, kPi).circular_variance(), WithinAbs(1.0, 1e-15));
  const Complex q = simpson_moment(-kPi / 2, kPi / 2);
  CHECK_THAT(PhaseMeasure::uniform(-kPi / 2, kPi / 2).circular_variance(),
             WithinAbs(1.0 - std::norm(q), 1e-10));
  CHECK_THAT(PhaseMeasure::uniform(-kPi / 2, kPi / 2).circular_variance(),
             WithinAbs(1.0 - 4.0 / (kPi * kPi), 1e-12));
}

TEST_CASE("circular variance is zero exactly for collapsed supports", "[measures]") {
  CHECK(PhaseMeasure::discrete({0.4}).circular_variance() == 0.0);
  CHECK(PhaseMeasure::discrete({0.4, 0.4 + 2 * kPi, 0.4 - 4 * kPi}).circular_variance() == 0.0);
  CHECK(PhaseMeasure::discrete({0.0, 1e-3}).circular_variance() > 0.0);
  CHECK(PhaseMeasure::discrete({0.0, kPi}).nondegenerate());
  CHECK(PhaseMeasure::uniform(0.0, 1e-3).circular_variance() > 0.0);
}

TEST_CASE("moment and variance stay in range", "[measures][property]") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int t = 0; t < 200; ++t) {
    double a = u(rng), b = u(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    const auto cont = PhaseMeasure::uniform(a, b);
    CHECK(std::abs(cont.first_moment()) <= 1.0 + 1e-15);
    const double v = cont.circular_variance();
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
    CHECK_THAT(v, WithinAbs(1.0 - std::norm(cont.first_moment()), 1e-14));

    std::vector<double> support;
    for (int k = 0; k < 1 + t % 5; ++k) support.push_back(u(rng));
    const auto disc = PhaseMeasure::discrete(support);
    CHECK(std::abs(disc.first_moment()) <= 1.0 + 1e-15);
    CHECK(disc.circular_variance() >= 0.0);
    CHECK(disc.circular_variance() <= 1.0);
  }
}

TEST_CASE("invalid measures are rejected", "[measures]") {
  CHECK_THROWS_AS(PhaseMeasure::uniform(1.0, 1.0), ValidationError);
  CHECK_THROWS_AS(PhaseMeasure::uniform(2.0, 1.0), ValidationError);
  CHECK_THROWS_AS(PhaseMeasure::uniform(0.0, INFINITY), ValidationError);
  CHECK_THROWS_AS(PhaseMeasure::discrete({}), ValidationError);
  CHECK_THROWS_AS(PhaseMeasure::discrete({0.0, NAN}), ValidationError);
  CHECK_THROWS_AS(PhaseMeasure::point(NAN), ValidationError);
}

TEST_CASE("sampling examples", "[measures][sample]") {
  const auto p = sample(PhaseMeasure::point(1.5), 3, 12345);
  REQUIRE(p.size() == 3);
  for (double t : p.phases) CHECK(t == 1.5);

  const auto unit = sample(PhaseMeasure::uniform(0.0, 1.0), 100000, 7);
  REQUIRE(unit.size() == 100000);
  for (double t : unit.phases) {
    CHECK(t >= 0.0);
    CHECK(t < 1.0);
  }

  const auto full = sample(PhaseMeasure::uniform(-kPi, kPi), 100000, 9);
  CHECK(std::abs(empirical_moment(full)) <= 5.0 / std::sqrt(1e5));
}

TEST_CASE("sampling is reproducible", "[measures][sample]") {
  const auto mu = PhaseMeasure::uniform(-1.0, 2.0);
  const auto a = sample(mu, 50, 99);
  const auto b = sample(mu, 50, 99);
  CHECK(a.phases == b.phases);
  CHECK(a.phases != sample(mu, 50, 100).phases);

  Rng r1 = make_rng(5), r2 = make_rng(5);
  CHECK(sample(mu, 10, r1).phases == sample(mu, 10, r2).phases);
  CHECK(sample(mu, 10, r1).phases == sample(mu, 10, r2).phases);
}

TEST_CASE("discrete draws hit only the support", "[measures][sample]") {
  const std::vector<double> support{-1.0, 0.25, 3.0};
  const auto v = sample(PhaseMeasure::discrete(support), 30000, 3);
  std::set<double> seen(v.phases.begin(), v.phases.end());
  CHECK(seen == std::set<double>(support.begin(), support.end()));
}

TEST_CASE("empirical moment is within 5 sigma", "[measures][sample][property]") {
  const PhaseMeasure measures[] = {
      PhaseMeasure::uniform(-kPi, kPi),         PhaseMeasure::uniform(-1.0, 1.0),
      PhaseMeasure::uniform(-kPi / 2, kPi / 2), PhaseMeasure::uniform(0.0, 4.0),
      PhaseMeasure::discrete({-kPi / 2, kPi / 2}), PhaseMeasure::discrete({0.0, 1.0, 2.5}),
      PhaseMeasure::point(0.3)};
  const std::size_t n = 20000;
  std::uint64_t seed = 1000;
  for (const auto& mu : measures) {
    const auto v = sample(mu, n, seed++);
    CHECK(std::abs(empirical_moment(v) - mu.first_moment()) <= 5.0 / std::sqrt(double(n)));
  }
}

TEST_CASE("parse_angle forms", "[measures][parse]") {
  CHECK(parse_angle("0.5") == 0.5);
  CHECK(parse_angle("-2") == -2.0);
  CHECK(parse_angle("pi") == kPi);
  CHECK(parse_angle("-pi") == -kPi);
  CHECK_THAT(parse_angle("pi/4"), WithinAbs(kPi / 4, 1e-15));
  CHECK_THAT(parse_angle("3*pi/2"), WithinAbs(1.5 * kPi, 1e-15));
  CHECK_THAT(parse_angle("0.5pi"), WithinAbs(0.5 * kPi, 1e-15));
  CHECK_THAT(parse_angle("-pi/2"), WithinAbs(-kPi / 2, 1e-15));
  CHECK_THROWS_AS(parse_angle(""), ParseError);
  CHECK_THROWS_AS(parse_angle("abc"), ParseError);
  CHECK_THROWS_AS(parse_angle("pi/0"), ParseError);
}

TEST_CASE("parse_measure descriptors", "[measures][parse]") {
  const auto u = parse_measure("uniform:-pi,pi");
  REQUIRE(std::holds_alternative<UniformInterval>(u.kind()));
  CHECK(std::get<UniformInterval>(u.kind()).low == -kPi);
  CHECK(std::get<UniformInterval>(u.kind()).high == kPi);

  const auto d = parse_measure("discrete:-1.5707963267948966,1.5707963267948966");
  REQUIRE(std::holds_alternative<DiscreteUniform>(d.kind()));
  CHECK(std::get<DiscreteUniform>(d.kind()).support.size() == 2);

  const auto p = parse_measure("point:0.7");
  REQUIRE(std::holds_alternative<PointMass>(p.kind()));
  CHECK(std::get<PointMass>(p.kind()).value == 0.7);

  CHECK_THROWS_AS(parse_measure("gaussian:0,1"), ParseError);
  CHECK_THROWS_AS(parse_measure("uniform:1"), ParseError);
  CHECK_THROWS_AS(parse_measure("uniform"), ParseError);
  CHECK_THROWS_AS(parse_measure("uniform:2,1"), ValidationError);
}

TEST_CASE("describe round-trips through parse_measure", "[measures][parse][property]") {
  const PhaseMeasure measures[] = {PhaseMeasure::uniform(-kPi, kPi), PhaseMeasure::uniform(0.1, 0.7),
                                   PhaseMeasure::discrete({-kPi / 2, kPi / 2, 1.0 / 3.0}),
                                   PhaseMeasure::point(-2.0 / 7.0)};
  for (const auto& mu : measures) {
    const auto back = parse_measure(mu.describe());
    CHECK(back.first_moment() == mu.first_moment());
    CHECK(back.describe() == mu.describe());
  }
}
