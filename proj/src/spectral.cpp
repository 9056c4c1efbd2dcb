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

#include "randphase/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "randphase/errors.hpp"

namespace randphase {
namespace {

constexpr double kBasisRejection = 1e-8;

ComplexMatrix canonical_phase(ComplexMatrix m) {
  Eigen::Index r = 0, c = 0;
  m.cwiseAbs().maxCoeff(&r, &c);
  const Complex pivot = m(r, c);
  if (std::abs(pivot) > 0) m *= std::conj(pivot) / std::abs(pivot);
  const double n = m.norm();
  if (n > 0) m /= n;
  return m;
}

// Hermitian basis of a subspace closed under the adjoint. Inner products
// between Hermitian matrices are real, so Gram-Schmidt with them keeps every
// basis element Hermitian.
std::vector<ComplexMatrix> hermitian_basis(const std::vector<ComplexMatrix>& span,
                                           std::size_t want) {
  std::vector<ComplexMatrix> candidates;
  for (const auto& x : span) {
    candidates.push_back(0.5 * (x + x.adjoint()));
    candidates.push_back(Complex(0.0, -0.5) * (x - x.adjoint()));
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const ComplexMatrix& a, const ComplexMatrix& b) { return a.norm() > b.norm(); });
  std::vector<ComplexMatrix> basis;
  for (auto h : candidates) {
    if (basis.size() == want) break;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& e : basis) h -= hs_inner(e, h).real() * e;
    }
    const double n = h.norm();
    if (n > kBasisRejection) {
      h /= n;
      h = 0.5 * (h + h.adjoint());
      basis.push_back(std::move(h));
    }
  }
  return basis;
}

}  // namespace

SupportPattern classify_support(const UnitaryMatrix& u, double threshold) {
  const ComplexMatrix& m = u.matrix();
  const double min_entry = m.cwiseAbs().minCoeff();
  if (min_entry > threshold) return SupportPattern::kAllNonzero;
  if (m.diagonal().cwiseAbs().minCoeff() > threshold) return SupportPattern::kDiagonalNonzero;
  return SupportPattern::kNeither;
}

std::string to_string(SupportPattern pattern) {
  switch (pattern) {
    case SupportPattern::kAllNonzero: return "all_nonzero";
    case SupportPattern::kDiagonalNonzero: return "diag_nonzero";
    case SupportPattern::kNeither: return "neither";
  }
  return "neither";
}

FixedSpace invariant_states(const Channel& channel, double tol) {
  const std::size_t d = channel.dim();
  const auto n = static_cast<Eigen::Index>(d * d);
  const ComplexMatrix shifted = channel.superoperator() - ComplexMatrix::Identity(n, n);
  Eigen::JacobiSVD<ComplexMatrix> svd(shifted, Eigen::ComputeFullV);
  const Eigen::VectorXd& sigma = svd.singularValues();

  std::vector<ComplexMatrix> kernel;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (sigma(k) <= tol) kernel.push_back(unvec(svd.matrixV().col(k), d));
  }

  FixedSpace out;
  out.dimension = kernel.size();
  out.basis = hermitian_basis(kernel, kernel.size());
  for (const auto& h : out.basis) {
    const Complex t = h.trace();
    if (std::abs(t) <= kInputTolerance) continue;
    try {
      out.states.emplace_back(h / t.real(), kInputTolerance);
    } catch (const ValidationError&) {
      // Not positive semidefinite; stays in the raw basis only.
    }
  }
  return out;
}

SpectralReport spectral_report(const Channel& channel, double peripheral_tol) {
  SpectralReport report;
  const auto pairs = eig(channel.superoperator());
  report.eigenvalues.reserve(pairs.size());
  for (const auto& p : pairs) report.eigenvalues.push_back(p.value);

  std::size_t closest_to_one = pairs.size();
  double best = peripheral_tol;
  bool other_peripheral = false;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const Complex lambda = pairs[k].value;
    const double to_one = std::abs(lambda - 1.0);
    const bool peripheral = std::abs(lambda) >= 1.0 - peripheral_tol;
    if (peripheral) report.peripheral.push_back(lambda);
    if (to_one <= peripheral_tol) {
      ++report.multiplicity_of_one;
      if (to_one <= best) {
        best = to_one;
        closest_to_one = k;
      }
    } else if (peripheral) {
      other_peripheral = true;
      report.peripheral_modes.push_back({lambda, canonical_phase(unvec(pairs[k].vector, channel.dim()))});
    }
  }

  double max_rest = 0.0;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (k != closest_to_one) max_rest = std::max(max_rest, std::abs(pairs[k].value));
  }
  report.spectral_gap = std::clamp(1.0 - max_rest, 0.0, 1.0);
  report.in_class_C = report.multiplicity_of_one == 1 && !other_peripheral;

  FixedSpace fixed = invariant_states(channel, peripheral_tol);
  report.fixed_space_dimension = fixed.dimension;
  report.fixed_space_basis = std::move(fixed.basis);
  report.invariant_states = std::move(fixed.states);
  return report;
}

RealMatrix unistochastic(const UnitaryMatrix& u) { return u.matrix().cwiseAbs2(); }

}  // namespace randphase
