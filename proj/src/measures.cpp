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

#include "randphase/measures.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "randphase/errors.hpp"

namespace randphase {
namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_decimal(std::string_view s, std::string_view context) {
  s = trim(s);
  double value = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError("cannot parse number '" + std::string(s) + "' in " + std::string(context));
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? s.size() - start : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string format_angle(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

// Distance of a phase from zero on the circle.
double circular_offset(double theta) {
  return std::abs(std::remainder(theta, 2.0 * std::numbers::pi));
}

}  // namespace

PhaseMeasure PhaseMeasure::uniform(double low, double high) {
  if (!std::isfinite(low) || !std::isfinite(high) || !(low < high)) {
    throw ValidationError("uniform measure requires finite bounds with low < high");
  }
  return PhaseMeasure(UniformInterval{low, high});
}

PhaseMeasure PhaseMeasure::discrete(std::vector<double> support) {
  if (support.empty()) throw ValidationError("discrete measure requires a non-empty support");
  if (!std::all_of(support.begin(), support.end(), [](double v) { return std::isfinite(v); })) {
    throw ValidationError("discrete measure support must be finite");
  }
  return PhaseMeasure(DiscreteUniform{std::move(support)});
}

PhaseMeasure PhaseMeasure::point(double value) {
  if (!std::isfinite(value)) throw ValidationError("point mass location must be finite");
  return PhaseMeasure(PointMass{value});
}

Complex PhaseMeasure::first_moment() const {
  return std::visit(
      Overloaded{
          [](const UniformInterval& u) -> Complex {
            // (e^{ib} - e^{ia}) / (i (b - a)) = e^{i (a+b)/2} sin(h) / h, h = (b-a)/2.
            const double half = 0.5 * (u.high - u.low);
            const double centre = 0.5 * (u.high + u.low);
            return std::polar(std::sin(half) / half, centre);
          },
          [](const DiscreteUniform& s) -> Complex {
            Complex sum = 0.0;
            for (double v : s.support) sum += std::polar(1.0, v);
            return sum / static_cast<double>(s.support.size());
          },
          [](const PointMass& p) -> Complex { return std::polar(1.0, p.value); },
      },
      kind_);
}

double PhaseMeasure::circular_variance() const {
  if (std::holds_alternative<PointMass>(kind_)) return 0.0;
  if (const auto* s = std::get_if<DiscreteUniform>(&kind_)) {
    const double ref = s->support.front();
    const bool collapsed = std::all_of(s->support.begin(), s->support.end(), [ref](double v) {
      return circular_offset(v - ref) <= kDegeneracyTolerance;
    });
    if (collapsed) return 0.0;
  }
  return std::clamp(1.0 - std::norm(first_moment()), 0.0, 1.0);
}

double PhaseMeasure::draw(Rng& rng) const {
  return std::visit(
      Overloaded{
          [&rng](const UniformInterval& u) {
            const double v = u.low + (u.high - u.low) * uniform01(rng);
            return v < u.high ? v : std::nextafter(u.high, u.low);
          },
          [&rng](const DiscreteUniform& s) {
            const auto n = s.support.size();
            auto idx = static_cast<std::size_t>(uniform01(rng) * static_cast<double>(n));
            return s.support[std::min(idx, n - 1)];
          },
          [](const PointMass& p) { return p.value; },
      },
      kind_);
}

std::string PhaseMeasure::describe() const {
  return std::visit(
      Overloaded{
          [](const UniformInterval& u) {
            return "uniform:" + format_angle(u.low) + "," + format_angle(u.high);
          },
          [](const DiscreteUniform& s) {
            std::string out = "discrete:";
            for (std::size_t k = 0; k < s.support.size(); ++k) {
              if (k) out += ",";
              out += format_angle(s.support[k]);
            }
            return out;
          },
          [](const PointMass& p) { return "point:" + format_angle(p.value); },
      },
      kind_);
}

PhaseVector sample(const PhaseMeasure& measure, std::size_t d, Rng& rng) {
  PhaseVector theta;
  theta.phases.reserve(d);
  for (std::size_t j = 0; j < d; ++j) theta.phases.push_back(measure.draw(rng));
  return theta;
}

PhaseVector sample(const PhaseMeasure& measure, std::size_t d, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  return sample(measure, d, rng);
}

double parse_angle(std::string_view text) {
  std::string_view s = trim(text);
  const auto pi_pos = s.find("pi");
  if (pi_pos == std::string_view::npos) return parse_decimal(s, "angle");

  std::string_view head = s.substr(0, pi_pos);
  std::string_view tail = s.substr(pi_pos + 2);
  double coefficient = 1.0;
  head = trim(head);
  if (!head.empty() && head.back() == '*') head.remove_suffix(1);
  head = trim(head);
  if (head == "-") {
    coefficient = -1.0;
  } else if (head == "+" || head.empty()) {
    coefficient = 1.0;
  } else {
    coefficient = parse_decimal(head, "angle '" + std::string(s) + "'");
  }
  double divisor = 1.0;
  tail = trim(tail);
  if (!tail.empty()) {
    if (tail.front() != '/') throw ParseError("cannot parse angle '" + std::string(s) + "'");
    divisor = parse_decimal(tail.substr(1), "angle '" + std::string(s) + "'");
    if (divisor == 0.0) throw ParseError("angle '" + std::string(s) + "' divides by zero");
  }
  return coefficient * std::numbers::pi / divisor;
}

PhaseMeasure parse_measure(std::string_view text) {
  const std::string_view s = trim(text);
  const auto colon = s.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("measure '" + std::string(s) +
                     "' must look like uniform:a,b | discrete:v1,... | point:v");
  }
  const std::string_view family = s.substr(0, colon);
  const auto args = split(s.substr(colon + 1), ',');
  std::vector<double> values;
  for (auto a : args) values.push_back(parse_angle(a));

  if (family == "uniform") {
    if (values.size() != 2) throw ParseError("uniform measure takes exactly two bounds");
    return PhaseMeasure::uniform(values[0], values[1]);
  }
  if (family == "discrete") return PhaseMeasure::discrete(std::move(values));
  if (family == "point") {
    if (values.size() != 1) throw ParseError("point measure takes exactly one value");
    return PhaseMeasure::point(values[0]);
  }
  throw ParseError("unknown measure family '" + std::string(family) + "'");
}

}  // namespace randphase
