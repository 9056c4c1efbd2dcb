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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "randphase/linalg.hpp"
#include "randphase/measures.hpp"

namespace randphase {

enum class Provenance {
  kExactUnitary,
  kAnalyticMean,
  kMonteCarloMean,
  kDiscreteKraus,
  kComposite,
};

struct ChannelOrigin {
  Provenance kind = Provenance::kComposite;
  std::size_t samples = 0;  // Monte Carlo sample count; 0 otherwise
};

std::string to_string(Provenance p);

/// A linear map on d x d matrices stored as its d^2 x d^2 superoperator in
/// the column-stacking convention: vec(Phi(X)) = S vec(X). A Kraus list, when
/// present, satisfies S = sum_i conj(K_i) kron K_i.
class Channel {
 public:
  /// Wraps a superoperator as is; no CPTP check is made.
  static Channel from_superoperator(ComplexMatrix superoperator, ChannelOrigin origin);
  /// Builds the superoperator from the operators. Throws ShapeError for an
  /// empty list or mixed dimensions.
  static Channel from_kraus(std::vector<ComplexMatrix> operators, ChannelOrigin origin);
  static Channel identity(std::size_t d);

  std::size_t dim() const noexcept { return dim_; }
  const ComplexMatrix& superoperator() const noexcept { return superop_; }
  const std::optional<std::vector<ComplexMatrix>>& kraus() const noexcept { return kraus_; }
  const ChannelOrigin& origin() const noexcept { return origin_; }

 private:
  Channel(std::size_t dim, ComplexMatrix superop, std::optional<std::vector<ComplexMatrix>> kraus,
          ChannelOrigin origin)
      : dim_(dim), superop_(std::move(superop)), kraus_(std::move(kraus)), origin_(origin) {}

  std::size_t dim_;
  ComplexMatrix superop_;
  std::optional<std::vector<ComplexMatrix>> kraus_;
  ChannelOrigin origin_;
};

/// rho -> U rho U^dagger.
Channel unitary_conjugation(const UnitaryMatrix& u);

/// The conjugation channel of U_theta = U diag(e^{i theta_1}, ..., e^{i theta_d}).
Channel sample_random_channel(const UnitaryMatrix& u, const PhaseVector& theta);

/// Exact average of the random conjugation channel over i.i.d. phases:
///
///   rho -> U (|m|^2 rho + (1 - |m|^2) diag(rho)) U^dagger,   m = E[e^{i theta}],
///
/// since E[e^{i(theta_j - theta_l)}] is 1 on the diagonal and |m|^2 off it.
Channel mean_channel(const UnitaryMatrix& u, const PhaseMeasure& measure);

/// Samples per independently seeded batch in `monte_carlo_mean`.
inline constexpr std::size_t kMonteCarloBatch = 1024;

/// Empirical average of `samples` sampled conjugation channels. Samples are
/// drawn in batches of kMonteCarloBatch, batch b from a generator seeded with
/// seed + b, and batch sums are accumulated in batch order. The result is
/// therefore independent of `threads`.
Channel monte_carlo_mean(const UnitaryMatrix& u, const PhaseMeasure& measure,
                         std::size_t samples, std::uint64_t seed, unsigned threads = 1);

/// Phi(X) for an arbitrary d x d matrix.
ComplexMatrix apply_channel(const Channel& channel, const ComplexMatrix& x);
/// Phi(rho). The output is re-validated as a density matrix; a violation
/// raises NumericalError.
DensityMatrix apply_channel(const Channel& channel, const DensityMatrix& rho);
/// sum_i K_i X K_i^dagger. Throws Error when the channel carries no Kraus list.
ComplexMatrix apply_kraus(const Channel& channel, const ComplexMatrix& x);

/// first o second, i.e. X -> first(second(X)).
Channel compose(const Channel& first, const Channel& second);
/// n-fold composition; power(phi, 0) is the identity channel.
Channel power(const Channel& channel, unsigned n);

struct BistochasticCheck {
  bool ok;
  double unital_residual;  // ||Phi(I) - I||_HS
  double trace_residual;   // ||S^dagger vec(I) - vec(I)||, zero iff tr Phi(X) = tr X
};

BistochasticCheck is_bistochastic(const Channel& channel, double tol = kInputTolerance);

struct ChoiReport {
  ComplexMatrix matrix;        // sum_{jk} Phi(E_jk) kron E_jk
  Eigen::VectorXd eigenvalues; // ascending, of the Hermitian part
  bool completely_positive;    // all eigenvalues >= -tol
  std::size_t rank;            // eigenvalues above tol
};

ChoiReport choi_matrix(const Channel& channel, double tol = 1e-10);

/// ||sum_i K_i^dagger K_i - I||_HS.
double kraus_completeness_residual(const std::vector<ComplexMatrix>& operators);

/// ||S_a - S_b||_HS.
double superoperator_distance(const Channel& a, const Channel& b);

}  // namespace randphase
