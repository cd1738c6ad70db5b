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

#include "qregret/geometry.hpp"

#include <cmath>

#include "qregret/tolerances.hpp"

namespace qregret {

bool QuantumGeometry::pair_degenerate(int j, int k) const {
  return qfim(j, j) * qfim(k, k) <= tol::kDegenerateQfim;
}

SldSet sld_at(const ParametricModel& model, const RealVector& theta) {
  const DensityMatrix rho = model.state_at(theta);
  const HermitianEig eig = hermitian_eig(rho.mat());
  const int dim = rho.dim();

  SldSet slds;
  slds.theta = theta;
  slds.operators.reserve(model.n_params);
  for (int j = 0; j < model.n_params; ++j) {
    const ComplexMatrix drho = model.derivative(theta, j);
    // Work in the eigenbasis of rho.
    const ComplexMatrix d =
        eig.eigenvectors.adjoint() * drho * eig.eigenvectors;
    ComplexMatrix l = ComplexMatrix::Zero(dim, dim);
    double skipped_weight = 0.0;
    for (int u = 0; u < dim; ++u) {
      for (int v = 0; v < dim; ++v) {
        const double denom = eig.eigenvalues[u] + eig.eigenvalues[v];
        if (denom <= tol::kKernel) {
          skipped_weight = std::max(skipped_weight, std::abs(d(u, v)));
          continue;
        }
        l(u, v) = 2.0 * d(u, v) / denom;
      }
    }
    if (skipped_weight > tol::kKernelWeight) {
      throw Error(ErrorKind::DegenerateSupport,
                  "derivative has weight on the kernel of rho; the SLD "
                  "equation is unsolvable for parameter " +
                      std::to_string(j));
    }
    ComplexMatrix back = eig.eigenvectors * l * eig.eigenvectors.adjoint();
    slds.operators.push_back(ComplexMatrix((back + back.adjoint()) / 2.0));
  }
  return slds;
}

namespace {

/// Fills c / c_tilde / degenerate from the tensor, the SLDs and sqrt(rho).
void fill_coefficients(QuantumGeometry& geom,
                       const ComplexMatrix* sqrt_rho) {
  const int n = geom.n_params();
  geom.c = RealMatrix::Zero(n, n);
  geom.c_tilde = RealMatrix::Zero(n, n);
  geom.degenerate.assign(n, false);
  for (int j = 0; j < n; ++j) {
    geom.degenerate[j] = geom.qfim(j, j) <= tol::kDegenerateQfim;
  }
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      const double denom = geom.qfim(j, j) * geom.qfim(k, k);
      if (denom <= tol::kDegenerateQfim) continue;  // stays 0, flagged
      const double scale = std::sqrt(denom);
      geom.c(j, k) = geom.c(k, j) =
          std::abs(geom.q_tensor(j, k).imag()) / scale;
      if (sqrt_rho != nullptr) {
        const ComplexMatrix commutator =
            geom.slds.operators[j] * geom.slds.operators[k] -
            geom.slds.operators[k] * geom.slds.operators[j];
        geom.c_tilde(j, k) = geom.c_tilde(k, j) =
            trace_norm(ComplexMatrix(*sqrt_rho * commutator * *sqrt_rho)) /
            (2.0 * scale);
      } else {
        geom.c_tilde(j, k) = geom.c_tilde(k, j) = geom.c(j, k);
      }
    }
  }
}

}  // namespace

QuantumGeometry geometric_tensor(const ParametricModel& model,
                                 const RealVector& theta) {
  QuantumGeometry geom;
  geom.slds = sld_at(model, theta);
  const ComplexMatrix rho = model.state_at(theta).mat();
  const int n = model.n_params;

  geom.q_tensor.resize(n, n);
  for (int j = 0; j < n; ++j) {
    for (int k = j; k < n; ++k) {
      const Complex q =
          (geom.slds.operators[j] * geom.slds.operators[k] * rho).trace();
      geom.q_tensor(j, k) = q;
      geom.q_tensor(k, j) = std::conj(q);
    }
  }
  geom.qfim = geom.q_tensor.real();
  geom.qfim = RealMatrix((geom.qfim + geom.qfim.transpose()) / 2.0);

  const ComplexMatrix sqrt_rho = matrix_sqrt_psd(rho);
  fill_coefficients(geom, &sqrt_rho);
  return geom;
}

QuantumGeometry pure_state_tensor(const ComplexVector& psi,
                                  const std::vector<ComplexVector>& dpsi) {
  if (std::abs(psi.norm() - 1.0) > tol::kStructural) {
    throw Error(ErrorKind::NotNormalized, "pure_state_tensor: |psi| != 1");
  }
  const int n = static_cast<int>(dpsi.size());
  if (n == 0) throw Error(ErrorKind::BadArgument, "no derivative vectors");
  for (const ComplexVector& d : dpsi) {
    if (d.size() != psi.size()) {
      throw Error(ErrorKind::DimMismatch, "derivative vector dimension");
    }
  }

  QuantumGeometry geom;
  geom.q_tensor.resize(n, n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      const Complex overlap_jk = dpsi[j].dot(dpsi[k]);  // <d_j psi|d_k psi>
      const Complex dj_psi = dpsi[j].dot(psi);
      const Complex psi_dk = psi.dot(dpsi[k]);
      geom.q_tensor(j, k) = 4.0 * (overlap_jk - dj_psi * psi_dk);
    }
  }
  geom.q_tensor =
      ComplexMatrix((geom.q_tensor + geom.q_tensor.adjoint()) / 2.0);
  geom.qfim = geom.q_tensor.real();
  geom.qfim = RealMatrix((geom.qfim + geom.qfim.transpose()) / 2.0);

  // Pure-state SLDs: L_j = 2 d_j rho = 2 (|d_j psi><psi| + |psi><d_j psi|).
  geom.slds.theta = RealVector::Zero(n);
  geom.slds.operators.reserve(n);
  for (int j = 0; j < n; ++j) {
    ComplexMatrix l =
        2.0 * (dpsi[j] * psi.adjoint() + psi * dpsi[j].adjoint());
    geom.slds.operators.push_back(std::move(l));
  }

  fill_coefficients(geom, nullptr);  // c_tilde = c for pure states
  return geom;
}

}  // namespace qregret
