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

#include <vector>

#include "qregret/state.hpp"

namespace qregret {

/// Symmetric logarithmic derivative operators at a parameter point: the
/// Hermitian solutions of (L_j rho + rho L_j) / 2 = d_j rho.
struct SldSet {
  std::vector<ComplexMatrix> operators;  // one L_j per parameter
  RealVector theta;
};

/// Quantum geometric tensor Q_jk = tr(L_j L_k rho) with the derived
/// quantities consumed by the regret machinery:
///   qfim      = Re Q,
///   c_jk      = |Im Q_jk| / sqrt(qfim_jj qfim_kk),
///   c_tilde_jk = tr|sqrt(rho) [L_j, L_k] sqrt(rho)| / (2 sqrt(qfim_jj qfim_kk)).
/// Pairs whose qfim_jj * qfim_kk falls at or below 1e-14 get both
/// coefficients defined as 0 and are reported as degenerate.
struct QuantumGeometry {
  ComplexMatrix q_tensor;
  RealMatrix qfim;
  RealMatrix c;
  RealMatrix c_tilde;
  SldSet slds;
  std::vector<bool> degenerate;  // per parameter: qfim_jj <= 1e-14

  int n_params() const { return static_cast<int>(qfim.rows()); }
  bool pair_degenerate(int j, int k) const;
};

/// SLDs via the eigendecomposition of rho: in the eigenbasis,
/// L_j(u,v) = 2 <u|d_j rho|v> / (lambda_u + lambda_v), with eigenpairs
/// whose lambda_u + lambda_v <= 1e-10 skipped (component set to 0).
/// Throws DegenerateSupport when the skipped kernel block carries
/// derivative weight above 1e-6: the SLD equation is then unsolvable.
SldSet sld_at(const ParametricModel& model, const RealVector& theta);

QuantumGeometry geometric_tensor(const ParametricModel& model,
                                 const RealVector& theta);

/// Geometric tensor of a pure family directly from the state vector and
/// its derivatives: Q_jk = 4 (<d_j psi|d_k psi> - <d_j psi|psi><psi|d_k psi>).
/// For pure states c_tilde coincides with c.  Throws NotNormalized when
/// ||psi| - 1| exceeds 1e-10.
QuantumGeometry pure_state_tensor(const ComplexVector& psi,
                                  const std::vector<ComplexVector>& dpsi);

}  // namespace qregret
