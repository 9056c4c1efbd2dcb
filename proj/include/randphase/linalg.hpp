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

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <vector>

namespace randphase {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;

/// Tolerance for checks on user-supplied matrices.
inline constexpr double kInputTolerance = 1e-9;
/// Tolerance for checks on matrices built by this library.
inline constexpr double kInternalTolerance = 1e-12;
/// Largest matrix `eig` accepts (a 16-dimensional channel's superoperator).
inline constexpr std::size_t kMaxEigenDimension = 256;

/// Hilbert-Schmidt inner product tr(A^dagger B). Throws ShapeError when the
/// dimensions differ.
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);
double hs_norm(const ComplexMatrix& a);
double hs_distance(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Column-stacking vectorization: entry (j, l) of a d x d matrix lands at
// index j + l * d, so vec(A X B) = (B^T kron A) vec(X).
ComplexVector vec(const ComplexMatrix& a);
ComplexMatrix unvec(const ComplexVector& v, std::size_t d);

ComplexMatrix matrix_unit(std::size_t d, std::size_t row, std::size_t col);

struct EigenPair {
  Complex value;
  ComplexVector vector;  // unit 2-norm
  double residual;       // ||M v - value v||
};

/// All eigenpairs of a square matrix, ordered by descending modulus, then
/// descending real part, then descending imaginary part. Moduli and parts
/// closer than 1e-12 count as ties.
///
/// Throws ShapeError for non-square input, CapacityError above
/// kMaxEigenDimension and NumericalError when the QR iteration does not
/// converge.
std::vector<EigenPair> eig(const ComplexMatrix& m);

/// Eigenvalues only, same ordering as `eig`.
std::vector<Complex> eigenvalues(const ComplexMatrix& m);

/// Ascending eigenvalues of the Hermitian part (M + M^dagger) / 2.
Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& m);

void sort_spectrum(std::vector<Complex>& values);

double unitarity_residual(const ComplexMatrix& u);    // ||U^dagger U - I||
double hermiticity_residual(const ComplexMatrix& a);  // ||A - A^dagger||

/// A square matrix that passed the unitarity check ||U^dagger U - I|| <= tol.
class UnitaryMatrix {
 public:
  /// Throws ValidationError carrying the measured residual.
  explicit UnitaryMatrix(ComplexMatrix m, double tol = kInputTolerance);

  const ComplexMatrix& matrix() const noexcept { return m_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(m_.rows()); }

 private:
  ComplexMatrix m_;
};

/// Hermitian, unit-trace, positive semidefinite matrix (all within tol).
class DensityMatrix {
 public:
  /// Throws ValidationError naming the violated condition.
  explicit DensityMatrix(ComplexMatrix m, double tol = kInputTolerance);

  static DensityMatrix maximally_mixed(std::size_t d);
  static DensityMatrix basis_state(std::size_t d, std::size_t index);

  const ComplexMatrix& matrix() const noexcept { return m_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(m_.rows()); }

 private:
  ComplexMatrix m_;
};

/// ||rho - I/d||_HS.
double dist_to_maximally_mixed(const DensityMatrix& rho);
double dist_to_maximally_mixed(const ComplexMatrix& rho);

}  // namespace randphase
