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

#include "qregret/linalg.hpp"

#include <cmath>

#include "qregret/tolerances.hpp"

namespace qregret {

double max_abs(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

double max_abs(const RealMatrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const ComplexMatrix& m) {
  return max_abs(ComplexMatrix(m - m.adjoint()));
}

bool is_hermitian(const ComplexMatrix& m, double tolerance) {
  return m.rows() == m.cols() && hermiticity_defect(m) <= tolerance;
}

HermitianEig hermitian_eig(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::NonSquare, "hermitian_eig needs a square matrix");
  }
  if (!is_hermitian(m, tol::kStructural)) {
    throw Error(ErrorKind::NonHermitian,
                "hermitian_eig: symmetry defect exceeds 1e-10");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
  HermitianEig out;
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& m) {
  HermitianEig eig = hermitian_eig(m);
  RealVector lambda = eig.eigenvalues;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (lambda[i] < -tol::kStructural) {
      throw Error(ErrorKind::NotPsd,
                  "matrix_sqrt_psd: eigenvalue below -1e-10");
    }
    if (lambda[i] < 0.0) lambda[i] = 0.0;
  }
  ComplexMatrix root = eig.eigenvectors *
                       lambda.cwiseSqrt().asDiagonal() *
                       eig.eigenvectors.adjoint();
  return ComplexMatrix((root + root.adjoint()) / 2.0);
}

double trace_norm(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::NonSquare, "trace_norm needs a square matrix");
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues().sum();
}

ComplexMatrix random_gaussian_matrix(int rows, int cols, Rng& rng) {
  ComplexMatrix g(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      g(i, j) = Complex(rng.gaussian(), rng.gaussian());
    }
  }
  return g;
}

ComplexMatrix random_hermitian(int dim, Rng& rng) {
  ComplexMatrix g = random_gaussian_matrix(dim, dim, rng);
  return ComplexMatrix((g + g.adjoint()) / 2.0);
}

ComplexMatrix haar_unitary(int dim, Rng& rng) {
  ComplexMatrix g = random_gaussian_matrix(dim, dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(dim, dim);
  ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix column phases so R has positive diagonal; this makes Q Haar.
  for (int j = 0; j < dim; ++j) {
    Complex d = r(j, j);
    double mag = std::abs(d);
    if (mag > 0.0) q.col(j) *= d / mag;
  }
  return q;
}

ComplexMatrix hermitian_phase_exp(const ComplexMatrix& h, double scale) {
  HermitianEig eig = hermitian_eig(h);
  ComplexVector phases(eig.eigenvalues.size());
  for (Eigen::Index i = 0; i < phases.size(); ++i) {
    phases[i] = std::exp(Complex(0.0, scale * eig.eigenvalues[i]));
  }
  return eig.eigenvectors * phases.asDiagonal() * eig.eigenvectors.adjoint();
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

}  // namespace qregret
