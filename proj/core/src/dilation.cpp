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

#include "qregret/dilation.hpp"

#include <cmath>
#include <vector>

#include "qregret/tolerances.hpp"

namespace qregret {

DensityMatrix MeasurementChannel::apply(const DensityMatrix& rho) const {
  const RealVector p = outcome_distribution(povm, rho);
  ComplexMatrix out = ComplexMatrix::Zero(out_dim(), out_dim());
  for (int x = 0; x < out_dim(); ++x) out(x, x) = p[x];
  return DensityMatrix(std::move(out));
}

SldSet channel_sld(const MeasurementChannel& channel,
                   const ParametricModel& model, const RealVector& theta) {
  const Povm& povm = channel.povm;
  const RealVector p = outcome_distribution(povm, model.state_at(theta));
  const int m = channel.out_dim();

  SldSet slds;
  slds.theta = theta;
  slds.operators.reserve(model.n_params);
  for (int j = 0; j < model.n_params; ++j) {
    const ComplexMatrix drho = model.derivative(theta, j);
    ComplexMatrix l = ComplexMatrix::Zero(m, m);
    for (int x = 0; x < m; ++x) {
      const double dp = (povm.effect(x) * drho).trace().real();
      if (p[x] <= tol::kZeroProbability) {
        if (std::abs(dp) > tol::kZeroProbabilityDerivative) {
          throw Error(ErrorKind::SingularOutcome,
                      "outcome " + povm.labels()[x] +
                          " has zero probability but carries derivative "
                          "weight");
        }
        continue;
      }
      l(x, x) = dp / p[x];
    }
    slds.operators.push_back(std::move(l));
  }
  return slds;
}

Dilation build_dilation(const MeasurementChannel& channel,
                        std::optional<std::uint64_t> completion_seed) {
  const int d = channel.system_dim();
  const int m = channel.out_dim();
  const int total = d * m * m;
  if (total > 64) {
    throw Error(ErrorKind::TooLarge,
                "dilation space d*m^2 = " + std::to_string(total) +
                    " exceeds the desk-scale cap of 64");
  }

  Dilation dil{channel, ComplexMatrix::Zero(total, d),
               ComplexMatrix::Zero(total, total)};

  // V = sum_x sqrt(M_x) (x) |x> (x) |x>:  V[(s, x, x), t] = sqrt(M_x)[s, t].
  for (int x = 0; x < m; ++x) {
    const ComplexMatrix root = matrix_sqrt_psd(channel.povm.effect(x));
    for (int s = 0; s < d; ++s) {
      for (int t = 0; t < d; ++t) {
        dil.isometry(dil.flat_index(s, x, x), t) = root(s, t);
      }
    }
  }

  // U's columns on the (t, 0, 0) input slice are V's columns; the rest is
  // any orthonormal completion.
  std::vector<bool> reserved(total, false);
  for (int t = 0; t < d; ++t) reserved[dil.flat_index(t, 0, 0)] = true;
  ComplexMatrix basis(total, total);
  for (int t = 0; t < d; ++t) basis.col(t) = dil.isometry.col(t);

  ComplexMatrix candidates;
  if (completion_seed.has_value()) {
    Rng rng(*completion_seed);
    candidates = haar_unitary(total, rng);
  } else {
    candidates = ComplexMatrix::Identity(total, total);
  }

  int filled = d;
  for (int c = 0; c < total && filled < total; ++c) {
    ComplexVector v = candidates.col(c);
    // Two Gram-Schmidt passes keep the completion orthonormal to 1e-14.
    for (int pass = 0; pass < 2; ++pass) {
      for (int k = 0; k < filled; ++k) {
        v -= basis.col(k).dot(v) * basis.col(k);
      }
    }
    const double norm = v.norm();
    if (norm < 0.5) continue;  // candidate inside the spanned subspace
    basis.col(filled) = v / norm;
    ++filled;
  }
  if (filled != total) {
    throw Error(ErrorKind::BadArgument, "basis completion failed");
  }

  // Scatter: basis column t goes to input index (t, 0, 0); the remaining
  // columns fill the leftover input indices in order.
  for (int t = 0; t < d; ++t) {
    dil.unitary.col(dil.flat_index(t, 0, 0)) = basis.col(t);
  }
  int next = d;
  for (int idx = 0; idx < total; ++idx) {
    if (!reserved[idx]) dil.unitary.col(idx) = basis.col(next++);
  }
  return dil;
}

namespace {

/// 1_d (x) X (x) 1_m for an m x m register operator X.
ComplexMatrix lift_register_operator(const Dilation& dil,
                                     const ComplexMatrix& x) {
  const int d = dil.system_dim();
  const int m = dil.out_dim();
  return kron(kron(ComplexMatrix::Identity(d, d), x),
              ComplexMatrix::Identity(m, m));
}

/// rho (x) |0><0| (x) |0><0|.
ComplexMatrix total_state(const Dilation& dil, const ComplexMatrix& rho) {
  const int m = dil.out_dim();
  ComplexMatrix e00 = ComplexMatrix::Zero(m, m);
  e00(0, 0) = 1.0;
  return kron(kron(rho, e00), e00);
}

}  // namespace

BridgeCheck bridge_check(const Dilation& dilation, const Povm& povm,
                         const ParametricModel& model, const RealVector& theta,
                         const QuantumGeometry& geom) {
  const Povm& own = dilation.channel.povm;
  if (own.n_outcomes() != povm.n_outcomes() || own.dim() != povm.dim()) {
    throw Error(ErrorKind::Mismatch, "dilation built for a different POVM");
  }
  for (int x = 0; x < povm.n_outcomes(); ++x) {
    if (max_abs(ComplexMatrix(own.effect(x) - povm.effect(x))) > 1e-12) {
      throw Error(ErrorKind::Mismatch, "dilation built for a different POVM");
    }
  }

  const int n = model.n_params;
  const int m = dilation.out_dim();
  const ComplexMatrix rho = model.state_at(theta).mat();
  const SldSet register_slds = channel_sld(dilation.channel, model, theta);

  const ComplexMatrix identity_rr =
      ComplexMatrix::Identity(m * m, m * m);
  std::vector<ComplexMatrix> noise_ops;  // N_j
  std::vector<ComplexMatrix> dilated;    // curly_L_j
  noise_ops.reserve(n);
  dilated.reserve(n);
  for (int j = 0; j < n; ++j) {
    ComplexMatrix lifted =
        lift_register_operator(dilation, register_slds.operators[j]);
    ComplexMatrix curly =
        dilation.unitary.adjoint() * lifted * dilation.unitary;
    noise_ops.push_back(curly - kron(geom.slds.operators[j], identity_rr));
    dilated.push_back(std::move(curly));
  }

  BridgeCheck out;
  out.regret_direct = geom.qfim - classical_fim(povm, model, theta);
  out.regret_via_error.resize(n, n);
  const ComplexMatrix rho_total = total_state(dilation, rho);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      out.regret_via_error(j, k) =
          (noise_ops[j] * noise_ops[k] * rho_total).trace().real();
    }
  }
  out.max_abs_gap =
      max_abs(RealMatrix(out.regret_direct - out.regret_via_error));

  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      out.commutator_norm = std::max(
          out.commutator_norm,
          max_abs(ComplexMatrix(dilated[j] * dilated[k] -
                                dilated[k] * dilated[j])));
    }
  }
  return out;
}

double ozawa_error(const Dilation& dilation, const ComplexMatrix& ideal,
                   const ComplexMatrix& register_obs,
                   const DensityMatrix& rho) {
  const int d = dilation.system_dim();
  const int m = dilation.out_dim();
  if (ideal.rows() != d || ideal.cols() != d || rho.dim() != d ||
      register_obs.rows() != m || register_obs.cols() != m) {
    throw Error(ErrorKind::DimMismatch, "ozawa_error operand dimensions");
  }
  const ComplexMatrix approx = dilation.unitary.adjoint() *
                               lift_register_operator(dilation, register_obs) *
                               dilation.unitary;
  const ComplexMatrix gap =
      approx - kron(ideal, ComplexMatrix::Identity(m * m, m * m));
  const double square =
      (gap * gap * total_state(dilation, rho.mat())).trace().real();
  return std::sqrt(std::max(square, 0.0));
}

}  // namespace qregret
