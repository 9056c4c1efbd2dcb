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

#include "randphase/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "randphase/errors.hpp"

namespace randphase {
namespace {

constexpr double kTieTolerance = 1e-12;

bool spectral_before(const Complex& a, const Complex& b) {
  const double ma = std::abs(a), mb = std::abs(b);
  if (std::abs(ma - mb) > kTieTolerance) return ma > mb;
  if (std::abs(a.real() - b.real()) > kTieTolerance) return a.real() > b.real();
  return a.imag() > b.imag();
}

std::string shape_of(const ComplexMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw ShapeError(std::string(what) + ": expected a non-empty square matrix, got " +
                     shape_of(m));
  }
}

void require_eig_size(const ComplexMatrix& m) {
  require_square(m, "eig");
  if (static_cast<std::size_t>(m.rows()) > kMaxEigenDimension) {
    throw CapacityError("eig: dimension " + std::to_string(m.rows()) +
                        " exceeds the supported maximum " +
                        std::to_string(kMaxEigenDimension));
  }
}

}  // namespace

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError("hs_inner: " + shape_of(a) + " vs " + shape_of(b));
  }
  return a.conjugate().cwiseProduct(b).sum();
}

double hs_norm(const ComplexMatrix& a) { return a.norm(); }

double hs_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError("hs_distance: " + shape_of(a) + " vs " + shape_of(b));
  }
  return (a - b).norm();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexVector vec(const ComplexMatrix& a) {
  ComplexVector v(a.size());
  const Eigen::Index rows = a.rows();
  for (Eigen::Index col = 0; col < a.cols(); ++col) {
    v.segment(col * rows, rows) = a.col(col);
  }
  return v;
}

ComplexMatrix unvec(const ComplexVector& v, std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d);
  if (v.size() != n * n) {
    throw ShapeError("unvec: vector of length " + std::to_string(v.size()) +
                     " cannot form a " + std::to_string(d) + "x" + std::to_string(d) +
                     " matrix");
  }
  ComplexMatrix a(n, n);
  for (Eigen::Index col = 0; col < n; ++col) a.col(col) = v.segment(col * n, n);
  return a;
}

ComplexMatrix matrix_unit(std::size_t d, std::size_t row, std::size_t col) {
  const auto n = static_cast<Eigen::Index>(d);
  ComplexMatrix e = ComplexMatrix::Zero(n, n);
  e(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = 1.0;
  return e;
}

void sort_spectrum(std::vector<Complex>& values) {
  std::stable_sort(values.begin(), values.end(), spectral_before);
}

std::vector<EigenPair> eig(const ComplexMatrix& m) {
  require_eig_size(m);
  Eigen::ComplexEigenSolver<ComplexMatrix> solver;
  solver.compute(m, /*computeEigenvectors=*/true);
  if (solver.info() != Eigen::Success) {
    const long iters = static_cast<long>(solver.getMaxIterations()) * m.rows();
    throw NumericalError("eig: QR iteration did not converge within " +
                             std::to_string(iters) + " iterations",
                         iters);
  }
  std::vector<EigenPair> pairs;
  pairs.reserve(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index k = 0; k < m.rows(); ++k) {
    ComplexVector v = solver.eigenvectors().col(k);
    const double n = v.norm();
    if (n > 0) v /= n;
    const Complex lambda = solver.eigenvalues()(k);
    const double residual = (m * v - lambda * v).norm();
    pairs.push_back({lambda, std::move(v), residual});
  }
  std::stable_sort(pairs.begin(), pairs.end(), [](const EigenPair& a, const EigenPair& b) {
    return spectral_before(a.value, b.value);
  });
  return pairs;
}

std::vector<Complex> eigenvalues(const ComplexMatrix& m) {
  require_eig_size(m);
  Eigen::ComplexEigenSolver<ComplexMatrix> solver;
  solver.compute(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    const long iters = static_cast<long>(solver.getMaxIterations()) * m.rows();
    throw NumericalError("eigenvalues: QR iteration did not converge within " +
                             std::to_string(iters) + " iterations",
                         iters);
  }
  std::vector<Complex> values(solver.eigenvalues().data(),
                              solver.eigenvalues().data() + solver.eigenvalues().size());
  sort_spectrum(values);
  return values;
}

Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& m) {
  require_square(m, "hermitian_eigenvalues");
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("hermitian_eigenvalues: solver did not converge");
  }
  return solver.eigenvalues();
}

double unitarity_residual(const ComplexMatrix& u) {
  require_square(u, "unitarity_residual");
  return (u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols())).norm();
}

double hermiticity_residual(const ComplexMatrix& a) {
  require_square(a, "hermiticity_residual");
  return (a - a.adjoint()).norm();
}

UnitaryMatrix::UnitaryMatrix(ComplexMatrix m, double tol) : m_(std::move(m)) {
  require_square(m_, "UnitaryMatrix");
  if (!m_.allFinite()) throw ValidationError("UnitaryMatrix: non-finite entries");
  const double r = unitarity_residual(m_);
  if (!(r <= tol)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "matrix is not unitary: ||U^dagger U - I||_HS = " << r << " exceeds " << tol;
    throw ValidationError(msg.str(), r);
  }
}

DensityMatrix::DensityMatrix(ComplexMatrix m, double tol) : m_(std::move(m)) {
  require_square(m_, "DensityMatrix");
  if (!m_.allFinite()) throw ValidationError("DensityMatrix: non-finite entries");
  std::ostringstream msg;
  msg.precision(17);
  const double herm = hermiticity_residual(m_);
  if (!(herm <= tol)) {
    msg << "density matrix is not Hermitian: ||rho - rho^dagger||_HS = " << herm;
    throw ValidationError(msg.str(), herm);
  }
  const double trace_err = std::abs(m_.trace() - Complex(1.0));
  if (!(trace_err <= tol)) {
    msg << "density matrix trace differs from 1 by " << trace_err;
    throw ValidationError(msg.str(), trace_err);
  }
  const double min_eig = hermitian_eigenvalues(m_).minCoeff();
  if (!(min_eig >= -tol)) {
    msg << "density matrix is not positive semidefinite: smallest eigenvalue " << min_eig;
    throw ValidationError(msg.str(), -min_eig);
  }
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d);
  return DensityMatrix(ComplexMatrix::Identity(n, n) / static_cast<double>(d),
                       kInternalTolerance);
}

DensityMatrix DensityMatrix::basis_state(std::size_t d, std::size_t index) {
  if (index >= d) {
    throw ShapeError("basis_state: index " + std::to_string(index) + " out of range for d=" +
                     std::to_string(d));
  }
  return DensityMatrix(matrix_unit(d, index, index), kInternalTolerance);
}

double dist_to_maximally_mixed(const ComplexMatrix& rho) {
  require_square(rho, "dist_to_maximally_mixed");
  const double d = static_cast<double>(rho.rows());
  return (rho - ComplexMatrix::Identity(rho.rows(), rho.cols()) / d).norm();
}

double dist_to_maximally_mixed(const DensityMatrix& rho) {
  return dist_to_maximally_mixed(rho.matrix());
}

}  // namespace randphase
