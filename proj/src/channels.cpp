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

#include "randphase/channels.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include "randphase/errors.hpp"

namespace randphase {
namespace {

// Beyond this many products compose() drops the Kraus list.
constexpr std::size_t kMaxComposedKraus = 4096;
constexpr unsigned kSquaringThreshold = 8;

ComplexMatrix conjugation_superop(const ComplexMatrix& k) { return kron(k.conjugate(), k); }

ComplexMatrix phase_rotated(const ComplexMatrix& u, const PhaseVector& theta) {
  if (theta.size() != static_cast<std::size_t>(u.cols())) {
    throw ShapeError("phase vector of length " + std::to_string(theta.size()) +
                     " does not match unitary dimension " + std::to_string(u.cols()));
  }
  ComplexMatrix out = u;
  for (Eigen::Index j = 0; j < u.cols(); ++j)
    out.col(j) *= std::polar(1.0, theta.phases[static_cast<std::size_t>(j)]);
  return out;
}

void require_dim(const Channel& channel, Eigen::Index rows, Eigen::Index cols, const char* what) {
  const auto d = static_cast<Eigen::Index>(channel.dim());
  if (rows != d || cols != d) {
    throw ShapeError(std::string(what) + ": channel acts on " + std::to_string(d) + "x" +
                     std::to_string(d) + " matrices, got " + std::to_string(rows) + "x" +
                     std::to_string(cols));
  }
}

std::size_t dim_from_superop(const ComplexMatrix& s) {
  const auto n = static_cast<std::size_t>(s.rows());
  const auto d = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
  if (s.rows() != s.cols() || d * d != n || d == 0) {
    throw ShapeError("superoperator must be d^2 x d^2, got " + std::to_string(s.rows()) + "x" +
                     std::to_string(s.cols()));
  }
  return d;
}

}  // namespace

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::kExactUnitary: return "exact_unitary";
    case Provenance::kAnalyticMean: return "analytic_mean";
    case Provenance::kMonteCarloMean: return "monte_carlo_mean";
    case Provenance::kDiscreteKraus: return "discrete_kraus";
    case Provenance::kComposite: return "composite";
  }
  return "unknown";
}

Channel Channel::from_superoperator(ComplexMatrix superoperator, ChannelOrigin origin) {
  const std::size_t d = dim_from_superop(superoperator);
  return Channel(d, std::move(superoperator), std::nullopt, origin);
}

Channel Channel::from_kraus(std::vector<ComplexMatrix> operators, ChannelOrigin origin) {
  if (operators.empty()) throw ShapeError("from_kraus: empty operator list");
  const Eigen::Index d = operators.front().rows();
  for (const auto& k : operators) {
    if (k.rows() != d || k.cols() != d) throw ShapeError("from_kraus: operators differ in shape");
  }
  ComplexMatrix s = ComplexMatrix::Zero(d * d, d * d);
  for (const auto& k : operators) s += conjugation_superop(k);
  return Channel(static_cast<std::size_t>(d), std::move(s), std::move(operators), origin);
}

Channel Channel::identity(std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d);
  return from_kraus({ComplexMatrix::Identity(n, n)}, {Provenance::kExactUnitary});
}

Channel unitary_conjugation(const UnitaryMatrix& u) {
  return Channel::from_kraus({u.matrix()}, {Provenance::kExactUnitary});
}

Channel sample_random_channel(const UnitaryMatrix& u, const PhaseVector& theta) {
  return Channel::from_kraus({phase_rotated(u.matrix(), theta)}, {Provenance::kExactUnitary});
}

Channel mean_channel(const UnitaryMatrix& u, const PhaseMeasure& measure) {
  const auto d = static_cast<Eigen::Index>(u.dim());
  const double coherence = 1.0 - measure.circular_variance();  // |m|^2
  // Diagonal factor E[conj(D) kron D]: entry (j, l) of rho sits at j + l d.
  ComplexMatrix dephasing = ComplexMatrix::Zero(d * d, d * d);
  for (Eigen::Index l = 0; l < d; ++l)
    for (Eigen::Index j = 0; j < d; ++j) dephasing(j + l * d, j + l * d) = (j == l) ? 1.0 : coherence;
  ComplexMatrix s = conjugation_superop(u.matrix()) * dephasing;
  return Channel::from_superoperator(std::move(s), {Provenance::kAnalyticMean});
}

Channel monte_carlo_mean(const UnitaryMatrix& u, const PhaseMeasure& measure, std::size_t samples,
                         std::uint64_t seed, unsigned threads) {
  if (samples == 0) throw ValidationError("monte_carlo_mean: sample count must be positive");
  const std::size_t d = u.dim();
  const auto n = static_cast<Eigen::Index>(d * d);
  const std::size_t batches = (samples + kMonteCarloBatch - 1) / kMonteCarloBatch;
  std::vector<ComplexMatrix> sums(batches);

  auto run_batch = [&](std::size_t b) {
    Rng rng = make_rng(seed + b);
    const std::size_t count = std::min(kMonteCarloBatch, samples - b * kMonteCarloBatch);
    ComplexMatrix acc = ComplexMatrix::Zero(n, n);
    for (std::size_t i = 0; i < count; ++i) {
      const PhaseVector theta = sample(measure, d, rng);
      acc += conjugation_superop(phase_rotated(u.matrix(), theta));
    }
    sums[b] = std::move(acc);
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(batches)));
  if (workers == 1) {
    for (std::size_t b = 0; b < batches; ++b) run_batch(b);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t b = w; b < batches; b += workers) run_batch(b);
      });
    }
    for (auto& t : pool) t.join();
  }

  ComplexMatrix total = ComplexMatrix::Zero(n, n);
  for (const auto& s : sums) total += s;
  total /= static_cast<double>(samples);
  return Channel::from_superoperator(std::move(total), {Provenance::kMonteCarloMean, samples});
}

ComplexMatrix apply_channel(const Channel& channel, const ComplexMatrix& x) {
  require_dim(channel, x.rows(), x.cols(), "apply_channel");
  return unvec(channel.superoperator() * vec(x), channel.dim());
}

DensityMatrix apply_channel(const Channel& channel, const DensityMatrix& rho) {
  ComplexMatrix out = apply_channel(channel, rho.matrix());
  try {
    return DensityMatrix(std::move(out), kInputTolerance);
  } catch (const ValidationError& e) {
    throw NumericalError(std::string("channel output is not a density matrix: ") + e.what());
  }
}

ComplexMatrix apply_kraus(const Channel& channel, const ComplexMatrix& x) {
  require_dim(channel, x.rows(), x.cols(), "apply_kraus");
  if (!channel.kraus()) throw Error("apply_kraus: channel has no Kraus representation");
  ComplexMatrix out = ComplexMatrix::Zero(x.rows(), x.cols());
  for (const auto& k : *channel.kraus()) out += k * x * k.adjoint();
  return out;
}

Channel compose(const Channel& first, const Channel& second) {
  if (first.dim() != second.dim()) {
    throw ShapeError("compose: dimensions " + std::to_string(first.dim()) + " and " +
                     std::to_string(second.dim()) + " differ");
  }
  if (first.kraus() && second.kraus() &&
      first.kraus()->size() * second.kraus()->size() <= kMaxComposedKraus) {
    std::vector<ComplexMatrix> ops;
    ops.reserve(first.kraus()->size() * second.kraus()->size());
    for (const auto& a : *first.kraus())
      for (const auto& b : *second.kraus()) ops.push_back(a * b);
    return Channel::from_kraus(std::move(ops), {Provenance::kComposite});
  }
  return Channel::from_superoperator(first.superoperator() * second.superoperator(),
                                     {Provenance::kComposite});
}

Channel power(const Channel& channel, unsigned n) {
  const auto size = static_cast<Eigen::Index>(channel.dim() * channel.dim());
  ComplexMatrix result = ComplexMatrix::Identity(size, size);
  if (n <= kSquaringThreshold) {
    for (unsigned i = 0; i < n; ++i) result = channel.superoperator() * result;
  } else {
    ComplexMatrix base = channel.superoperator();
    for (unsigned e = n; e > 0; e >>= 1) {
      if (e & 1u) result = result * base;
      if (e > 1) base = base * base;
    }
  }
  return Channel::from_superoperator(std::move(result), {Provenance::kComposite});
}

BistochasticCheck is_bistochastic(const Channel& channel, double tol) {
  const auto d = static_cast<Eigen::Index>(channel.dim());
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  const double unital = (apply_channel(channel, id) - id).norm();
  const ComplexVector vid = vec(id);
  const double trace = (channel.superoperator().adjoint() * vid - vid).norm();
  return {unital <= tol && trace <= tol, unital, trace};
}

ChoiReport choi_matrix(const Channel& channel, double tol) {
  const std::size_t d = channel.dim();
  const auto n = static_cast<Eigen::Index>(d * d);
  ComplexMatrix j = ComplexMatrix::Zero(n, n);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      const ComplexMatrix unit = matrix_unit(d, r, c);
      j += kron(apply_channel(channel, unit), unit);
    }
  }
  Eigen::VectorXd ev = hermitian_eigenvalues(j);
  const bool cp = ev.size() == 0 || ev.minCoeff() >= -tol;
  const auto rank = static_cast<std::size_t>((ev.array() > tol).count());
  return {std::move(j), std::move(ev), cp, rank};
}

double kraus_completeness_residual(const std::vector<ComplexMatrix>& operators) {
  if (operators.empty()) throw ShapeError("kraus_completeness_residual: empty operator list");
  const Eigen::Index d = operators.front().cols();
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  for (const auto& k : operators) sum += k.adjoint() * k;
  return (sum - ComplexMatrix::Identity(d, d)).norm();
}

double superoperator_distance(const Channel& a, const Channel& b) {
  return hs_distance(a.superoperator(), b.superoperator());
}

}  // namespace randphase
