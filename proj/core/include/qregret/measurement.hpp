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

#include <optional>
#include <vector>

#include "qregret/geometry.hpp"

namespace qregret {

/// Which incompatibility coefficient a report was built with.  The
/// trace-norm variant dominates the plain one and is the default.
enum class CoefficientKind { plain_c, tilde_c };

/// Information regret of a measurement against the quantum limit:
/// regret = qfim - cfim, normalized regrets delta_j = sqrt(R_jj / qfim_jj),
/// and the pairwise tradeoff
///   delta_j^2 + delta_k^2 + 2 sqrt(1 - c^2) delta_j delta_k >= c^2.
struct RegretReport {
  RealMatrix cfim;
  RealMatrix qfim;
  RealMatrix regret;
  RealVector delta;
  struct Pair {
    int j = 0;
    int k = 0;
    double c_used = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;  // lhs - rhs, >= 0 up to numerical noise
    CoefficientKind coefficient_kind = CoefficientKind::tilde_c;
  };
  std::vector<Pair> pairwise;

  double min_margin() const;
};

/// Tradeoff in terms of estimation errors, with gamma_j = 1/(nu E_jj qfim_jj):
///   gamma_j + gamma_k - 2 sqrt(1-c~^2) sqrt((1-gamma_j)(1-gamma_k))
///     <= 2 - c~^2.
/// Margins are rhs - lhs, reported signed: empirical covariances from
/// biased or small-sample estimators may push them negative.
struct ErrorTradeoffReport {
  RealVector gamma;
  struct Pair {
    int j = 0;
    int k = 0;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;  // rhs - lhs
  };
  std::vector<Pair> pairwise;
};

/// Born-rule outcome distribution p_x = tr(M_x rho); entries clipped to 0
/// at -1e-12.  Throws DimMismatch.
RealVector outcome_distribution(const Povm& povm, const DensityMatrix& rho);

/// Classical Fisher information matrix of a POVM at theta:
/// F_jk = sum_x (d_j p_x)(d_k p_x) / p_x with d_j p_x = tr(M_x d_j rho).
/// Outcomes with p_x <= 1e-12 contribute zero when their derivative is
/// below 1e-9 and raise SingularOutcome otherwise.
RealMatrix classical_fim(const Povm& povm, const ParametricModel& model,
                         const RealVector& theta);

/// Builds the regret report; throws NotDominated when qfim - cfim has an
/// eigenvalue below -1e-8 (inconsistent inputs, e.g. mismatched theta).
RegretReport regret_report(const QuantumGeometry& geom, const RealMatrix& cfim,
                           CoefficientKind kind = CoefficientKind::tilde_c);

/// Error-form tradeoff for an empirical covariance and nu runs, using the
/// trace-norm coefficient.  Throws BadCovariance.
ErrorTradeoffReport error_tradeoff_report(const QuantumGeometry& geom,
                                          const RealMatrix& err_cov, long nu);

/// One row of the coherent-signal comparison table: lower bounds on E_22
/// given E_11.  Curves undefined at a grid point are absent.
struct CoherentBoundRow {
  double e11 = 0.0;
  std::optional<double> regret_bound;    // 1 / (nu (4 - 1/(nu E11)))
  std::optional<double> rld_geometric;   // 1 / (4 nu^2 E11)
  std::optional<double> rld_arithmetic;  // 1/nu - E11
  std::optional<double> sld_harmonic;    // 1 / (nu (8 - 1/(nu E11)))
};

std::vector<CoherentBoundRow> comparison_bounds_coherent(
    long nu, const std::vector<double>& e11_grid);

}  // namespace qregret
