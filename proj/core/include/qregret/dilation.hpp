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

#include <cstdint>
#include <optional>

#include "qregret/measurement.hpp"

namespace qregret {

/// Measurement channel Phi(rho) = sum_x tr(M_x rho) |x><x| mapping system
/// states to diagonal register states, one basis vector per outcome.
struct MeasurementChannel {
  Povm povm;

  explicit MeasurementChannel(Povm p) : povm(std::move(p)) {}

  int system_dim() const { return povm.dim(); }
  int out_dim() const { return povm.n_outcomes(); }

  DensityMatrix apply(const DensityMatrix& rho) const;
};

/// Unitary dilation of the measurement channel on system (x) register (x)
/// register.  The isometry is V = sum_x sqrt(M_x) (x) |x> (x) |x>; the
/// unitary U completes V's columns, which sit on the |0>(x)|0> input slice,
/// to an orthonormal basis, so U (psi (x) |0> (x) |0>) = V psi and
/// Phi(rho) = tr_{1,3}[U (rho (x) |0><0| (x) |0><0|) U^dagger].
///
/// Tensor-factor ordering is fixed as (system, register, ancilla register)
/// with row-major flattening: flat index (s, r1, r2) = (s*m + r1)*m + r2,
/// so the partial trace over factors 1 and 3 leaves the middle register.
struct Dilation {
  MeasurementChannel channel;
  ComplexMatrix isometry;  // (d m^2) x d
  ComplexMatrix unitary;   // (d m^2) x (d m^2)

  int system_dim() const { return channel.system_dim(); }
  int out_dim() const { return channel.out_dim(); }
  int total_dim() const { return static_cast<int>(unitary.rows()); }

  int flat_index(int s, int r1, int r2) const {
    const int m = out_dim();
    return (s * m + r1) * m + r2;
  }
};

/// Diagonal SLDs of the channel output: L~_j = sum_x d_j ln p_x |x><x|.
/// Outcomes with p_x <= 1e-12 get a zero entry when their derivative
/// vanishes and raise SingularOutcome otherwise.
SldSet channel_sld(const MeasurementChannel& channel,
                   const ParametricModel& model, const RealVector& theta);

/// Builds the dilation; d m^2 <= 64 enforced (TooLarge).  When
/// `completion_seed` is set the basis completion draws candidate vectors
/// from a seeded Haar unitary instead of the standard basis; any
/// completion yields the same regret numbers.
Dilation build_dilation(const MeasurementChannel& channel,
                        std::optional<std::uint64_t> completion_seed = {});

/// Numerical check of the regret = measurement-error bridge:
///   regret_direct    = qfim - cfim,
///   regret_via_error = Re tr[N_j N_k (rho (x) |0><0| (x) |0><0|)]
/// with N_j = U^dagger (1 (x) L~_j (x) 1) U - L_j (x) 1 (x) 1.
/// Throws Mismatch when `povm` differs from the dilated one.
struct BridgeCheck {
  RealMatrix regret_direct;
  RealMatrix regret_via_error;
  double max_abs_gap = 0.0;
  double commutator_norm = 0.0;  // max over pairs of ||[curly_L_j, curly_L_k]||_max
};

BridgeCheck bridge_check(const Dilation& dilation, const Povm& povm,
                         const ParametricModel& model, const RealVector& theta,
                         const QuantumGeometry& geom);

/// Root-mean-square error of approximating the system observable `ideal`
/// by the dilated register observable `register_obs`:
///   sqrt(tr[(U^dagger (1 (x) X (x) 1) U - ideal (x) 1 (x) 1)^2 rho_total]).
double ozawa_error(const Dilation& dilation, const ComplexMatrix& ideal,
                   const ComplexMatrix& register_obs, const DensityMatrix& rho);

}  // namespace qregret
