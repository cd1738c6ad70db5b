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
#include <functional>
#include <string>
#include <vector>

#include "qregret/linalg.hpp"

namespace qregret {

/// Density operator: Hermitian, unit-trace, PSD within the structural
/// tolerances.  Immutable after construction; the invariant check runs in
/// every constructor and is callable on raw matrices.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix mat);

  /// Throws NonHermitian / BadArgument / NotPsd on invariant violations.
  static void validate(const ComplexMatrix& mat);

  int dim() const { return static_cast<int>(mat_.rows()); }
  const ComplexMatrix& mat() const { return mat_; }

 private:
  ComplexMatrix mat_;
};

/// Finite POVM: at least two Hermitian PSD effects of a common dimension
/// summing to the identity within 1e-9.
class Povm {
 public:
  explicit Povm(std::vector<ComplexMatrix> effects,
                std::vector<std::string> labels = {});

  static void validate(const std::vector<ComplexMatrix>& effects);

  int dim() const { return static_cast<int>(effects_[0].rows()); }
  int n_outcomes() const { return static_cast<int>(effects_.size()); }
  const std::vector<ComplexMatrix>& effects() const { return effects_; }
  const ComplexMatrix& effect(int x) const { return effects_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  std::vector<ComplexMatrix> effects_;
  std::vector<std::string> labels_;
};

/// Seeded random POVM: effects M_x = V_x^dagger V_x carved from the first
/// `dim` columns of a Haar unitary on a (dim * n_outcomes)-dimensional
/// space, partitioned into outcome blocks.  Deterministic per seed.
Povm random_povm(int dim, int n_outcomes, std::uint64_t seed);

/// Merges two outcomes of a POVM into one (effect sum), dropping `second`.
Povm merge_outcomes(const Povm& povm, int first, int second);

/// Parametric family theta -> rho_theta with analytic or central
/// finite-difference derivatives.
struct ParametricModel {
  int n_params = 0;
  std::function<DensityMatrix(const RealVector&)> state_at;
  /// Optional analytic derivative (theta, j) -> d rho / d theta_j.
  std::function<ComplexMatrix(const RealVector&, int)> derivative_at;
  double fd_step = 1e-5;

  /// Analytic derivative when supplied, otherwise central finite
  /// differences of state_at.  The result is checked Hermitian (1e-10)
  /// and traceless (1e-9).
  ComplexMatrix derivative(const RealVector& theta, int j) const;
};

}  // namespace qregret
