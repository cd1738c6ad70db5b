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

#include "qregret/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qregret/tolerances.hpp"

namespace qregret {

double RegretReport::min_margin() const {
  double m = std::numeric_limits<double>::infinity();
  for (const Pair& pair : pairwise) m = std::min(m, pair.margin);
  return m;
}

RealVector outcome_distribution(const Povm& povm, const DensityMatrix& rho) {
  if (povm.dim() != rho.dim()) {
    throw Error(ErrorKind::DimMismatch, "POVM and state dimensions differ");
  }
  RealVector p(povm.n_outcomes());
  for (int x = 0; x < povm.n_outcomes(); ++x) {
    // Rounding noise from valid PSD inputs stays above -1e-12; clip to 0.
    const double px = (povm.effect(x) * rho.mat()).trace().real();
    p[x] = std::max(px, 0.0);
  }
  return p;
}

namespace {

/// Probabilities and their parameter derivatives for a POVM at theta.
struct OutcomeDerivatives {
  RealVector p;
  RealMatrix dp;  // n_params x n_outcomes
};

OutcomeDerivatives outcome_derivatives(const Povm& povm,
                                       const ParametricModel& model,
                                       const RealVector& theta) {
  OutcomeDerivatives out;
  out.p = outcome_distribution(povm, model.state_at(theta));
  out.dp.resize(model.n_params, povm.n_outcomes());
  for (int j = 0; j < model.n_params; ++j) {
    const ComplexMatrix drho = model.derivative(theta, j);
    for (int x = 0; x < povm.n_outcomes(); ++x) {
      out.dp(j, x) = (povm.effect(x) * drho).trace().real();
    }
  }
  return out;
}

}  // namespace

RealMatrix classical_fim(const Povm& povm, const ParametricModel& model,
                         const RealVector& theta) {
  const OutcomeDerivatives der = outcome_derivatives(povm, model, theta);
  const int n = model.n_params;
  RealMatrix fim = RealMatrix::Zero(n, n);
  for (int x = 0; x < povm.n_outcomes(); ++x) {
    if (der.p[x] <= tol::kZeroProbability) {
      for (int j = 0; j < n; ++j) {
        if (std::abs(der.dp(j, x)) > tol::kZeroProbabilityDerivative) {
          throw Error(ErrorKind::SingularOutcome,
                      "outcome " + povm.labels()[x] +
                          " has zero probability but nonzero derivative; "
                          "the Fisher information diverges");
        }
      }
      continue;
    }
    for (int j = 0; j < n; ++j) {
      for (int k = j; k < n; ++k) {
        const double term = der.dp(j, x) * der.dp(k, x) / der.p[x];
        fim(j, k) += term;
        if (k != j) fim(k, j) += term;
      }
    }
  }
  return fim;
}

RegretReport regret_report(const QuantumGeometry& geom, const RealMatrix& cfim,
                           CoefficientKind kind) {
  const int n = geom.n_params();
  if (cfim.rows() != n || cfim.cols() != n) {
    throw Error(ErrorKind::DimMismatch, "cfim dimension differs from qfim");
  }
  if (max_abs(RealMatrix(cfim - cfim.transpose())) > tol::kCompleteness) {
    throw Error(ErrorKind::BadArgument, "cfim not symmetric");
  }

  RegretReport report;
  report.cfim = cfim;
  report.qfim = geom.qfim;
  report.regret = geom.qfim - cfim;
  report.regret =
      RealMatrix((report.regret + report.regret.transpose()) / 2.0);

  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(report.regret,
                                                   Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -tol::kDerived) {
    throw Error(ErrorKind::NotDominated,
                "cfim is not dominated by qfim; inputs are inconsistent");
  }

  report.delta.resize(n);
  for (int j = 0; j < n; ++j) {
    if (geom.degenerate[j]) {
      report.delta[j] = 0.0;
      continue;
    }
    const double ratio = report.regret(j, j) / geom.qfim(j, j);
    report.delta[j] = std::sqrt(std::clamp(ratio, 0.0, 1.0));
  }

  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      RegretReport::Pair pair;
      pair.j = j;
      pair.k = k;
      pair.coefficient_kind = kind;
      pair.c_used = (kind == CoefficientKind::plain_c) ? geom.c(j, k)
                                                       : geom.c_tilde(j, k);
      const double c2 = std::min(pair.c_used * pair.c_used, 1.0);
      const double dj = report.delta[j];
      const double dk = report.delta[k];
      pair.lhs = dj * dj + dk * dk + 2.0 * std::sqrt(1.0 - c2) * dj * dk;
      pair.rhs = c2;
      pair.margin = pair.lhs - pair.rhs;
      report.pairwise.push_back(pair);
    }
  }
  return report;
}

ErrorTradeoffReport error_tradeoff_report(const QuantumGeometry& geom,
                                          const RealMatrix& err_cov, long nu) {
  const int n = geom.n_params();
  if (err_cov.rows() != n || err_cov.cols() != n) {
    throw Error(ErrorKind::DimMismatch, "covariance dimension");
  }
  if (max_abs(RealMatrix(err_cov - err_cov.transpose())) > tol::kCompleteness) {
    throw Error(ErrorKind::BadCovariance, "covariance not symmetric");
  }
  if (nu < 1) throw Error(ErrorKind::BadArgument, "nu must be >= 1");

  ErrorTradeoffReport report;
  report.gamma.resize(n);
  for (int j = 0; j < n; ++j) {
    if (err_cov(j, j) <= 0.0) {
      throw Error(ErrorKind::BadCovariance, "covariance diagonal not positive");
    }
    report.gamma[j] = geom.degenerate[j]
                          ? 0.0
                          : 1.0 / (static_cast<double>(nu) * err_cov(j, j) *
                                   geom.qfim(j, j));
  }

  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      ErrorTradeoffReport::Pair pair;
      pair.j = j;
      pair.k = k;
      const double ct = geom.c_tilde(j, k);
      const double c2 = std::min(ct * ct, 1.0);
      const double gj = report.gamma[j];
      const double gk = report.gamma[k];
      // gamma beyond 1 (possible for empirical covariances) would make the
      // cross term imaginary; its contribution is clamped at zero there.
      const double cross = std::sqrt(std::max(1.0 - gj, 0.0) *
                                     std::max(1.0 - gk, 0.0));
      pair.lhs = gj + gk - 2.0 * std::sqrt(1.0 - c2) * cross;
      pair.rhs = 2.0 - c2;
      pair.margin = pair.rhs - pair.lhs;
      report.pairwise.push_back(pair);
    }
  }
  return report;
}

std::vector<CoherentBoundRow> comparison_bounds_coherent(
    long nu, const std::vector<double>& e11_grid) {
  if (nu < 1) throw Error(ErrorKind::BadArgument, "nu must be >= 1");
  const double dnu = static_cast<double>(nu);
  std::vector<CoherentBoundRow> table;
  table.reserve(e11_grid.size());
  for (double e11 : e11_grid) {
    if (!(e11 > 0.0)) {
      throw Error(ErrorKind::BadArgument, "E11 grid entries must be positive");
    }
    CoherentBoundRow row;
    row.e11 = e11;
    const double inv = 1.0 / (dnu * e11);
    if (inv < 4.0) row.regret_bound = 1.0 / (dnu * (4.0 - inv));
    row.rld_geometric = 1.0 / (4.0 * dnu * dnu * e11);
    row.rld_arithmetic = 1.0 / dnu - e11;
    if (inv < 8.0) row.sld_harmonic = 1.0 / (dnu * (8.0 - inv));
    table.push_back(row);
  }
  return table;
}

}  // namespace qregret
