// Copyright 2026 The qregret authors
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

#pragma once

#include <Eigen/Dense>
#include <complex>

#include "qregret/errors.hpp"
#include "qregret/rng.hpp"

namespace qregret {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Entrywise max-norm ||m||_max.
double max_abs(const ComplexMatrix& m);
double max_abs(const RealMatrix& m);

/// ||m - m^dagger||_max.
double hermiticity_defect(const ComplexMatrix& m);

bool is_hermitian(const ComplexMatrix& m, double tolerance);

struct HermitianEig {
  RealVector eigenvalues;      // descending
  ComplexMatrix eigenvectors;  // columns, ordered to match
};

/// Eigendecomposition of a Hermitian matrix, eigenvalues descending.
/// Throws NonHermitian when the symmetry defect exceeds 1e-10.
HermitianEig hermitian_eig(const ComplexMatrix& m);

/// Principal square root of a Hermitian PSD matrix.  Eigenvalues in
/// [-1e-10, 0) are clipped to zero; anything lower throws NotPsd.
ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& m);

/// Trace norm tr|m| = sum of singular values.  Throws NonSquare.
double trace_norm(const ComplexMatrix& m);

/// Matrix with independent standard complex Gaussian entries.
ComplexMatrix random_gaussian_matrix(int rows, int cols, Rng& rng);

/// Random Hermitian matrix (G + G^dagger) / 2.
ComplexMatrix random_hermitian(int dim, Rng& rng);

/// Haar-distributed unitary via phase-fixed QR of a Gaussian matrix.
ComplexMatrix haar_unitary(int dim, Rng& rng);

/// exp(i * scale * h) for Hermitian h, via eigendecomposition.
ComplexMatrix hermitian_phase_exp(const ComplexMatrix& h, double scale);

/// Kronecker product a (x) b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qregret
