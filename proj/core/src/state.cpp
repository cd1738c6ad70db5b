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

#include "qregret/state.hpp"

#include <cmath>
#include <utility>

#include "qregret/tolerances.hpp"

namespace qregret {

DensityMatrix::DensityMatrix(ComplexMatrix mat) : mat_(std::move(mat)) {
  validate(mat_);
}

void DensityMatrix::validate(const ComplexMatrix& mat) {
  if (mat.rows() != mat.cols() || mat.rows() < 1) {
    throw Error(ErrorKind::BadDims, "density matrix must be square");
  }
  if (hermiticity_defect(mat) > tol::kStructural) {
    throw Error(ErrorKind::NonHermitian, "density matrix not Hermitian");
  }
  if (std::abs(mat.trace().real() - 1.0) > tol::kStructural ||
      std::abs(mat.trace().imag()) > tol::kStructural) {
    throw Error(ErrorKind::BadArgument, "density matrix trace is not 1");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(mat,
                                                      Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -tol::kStructural) {
    throw Error(ErrorKind::NotPsd, "density matrix has a negative eigenvalue");
  }
}

Povm::Povm(std::vector<ComplexMatrix> effects, std::vector<std::string> labels)
    : effects_(std::move(effects)), labels_(std::move(labels)) {
  validate(effects_);
  if (labels_.empty()) {
    labels_.reserve(effects_.size());
    for (std::size_t x = 0; x < effects_.size(); ++x) {
      labels_.push_back(std::to_string(x));
    }
  } else if (labels_.size() != effects_.size()) {
    throw Error(ErrorKind::BadDims, "label count differs from effect count");
  }
}

void Povm::validate(const std::vector<ComplexMatrix>& effects) {
  if (effects.size() < 2) {
    throw Error(ErrorKind::BadDims,
                "a POVM needs at least two outcomes; a single effect is the "
                "identity and carries no information");
  }
  const Eigen::Index dim = effects[0].rows();
  if (dim < 1) throw Error(ErrorKind::BadDims, "empty effect");
  ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
  for (const ComplexMatrix& effect : effects) {
    if (effect.rows() != dim || effect.cols() != dim) {
      throw Error(ErrorKind::BadDims, "effects must share one dimension");
    }
    if (hermiticity_defect(effect) > tol::kStructural) {
      throw Error(ErrorKind::NonHermitian, "effect not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(
        effect, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -tol::kStructural) {
      throw Error(ErrorKind::NotPsd, "effect has a negative eigenvalue");
    }
    sum += effect;
  }
  if (max_abs(ComplexMatrix(sum - ComplexMatrix::Identity(dim, dim))) >
      tol::kCompleteness) {
    throw Error(ErrorKind::BadArgument, "effects do not sum to the identity");
  }
}

Povm random_povm(int dim, int n_outcomes, std::uint64_t seed) {
  if (dim < 2 || n_outcomes < 2) {
    throw Error(ErrorKind::BadDims,
                "random_povm needs dim >= 2 and n_outcomes >= 2");
  }
  Rng rng(seed);
  const int total = dim * n_outcomes;
  ComplexMatrix unitary = haar_unitary(total, rng);
  ComplexMatrix columns = unitary.leftCols(dim);
  std::vector<ComplexMatrix> effects;
  effects.reserve(n_outcomes);
  for (int x = 0; x < n_outcomes; ++x) {
    ComplexMatrix vx = columns.middleRows(x * dim, dim);
    ComplexMatrix effect = vx.adjoint() * vx;
    effects.push_back(ComplexMatrix((effect + effect.adjoint()) / 2.0));
  }
  return Povm(std::move(effects));
}

Povm merge_outcomes(const Povm& povm, int first, int second) {
  if (first == second || first < 0 || second < 0 ||
      first >= povm.n_outcomes() || second >= povm.n_outcomes()) {
    throw Error(ErrorKind::BadArgument, "merge_outcomes: bad outcome indices");
  }
  std::vector<ComplexMatrix> effects;
  std::vector<std::string> labels;
  for (int x = 0; x < povm.n_outcomes(); ++x) {
    if (x == second) continue;
    ComplexMatrix effect = povm.effect(x);
    if (x == first) effect += povm.effect(second);
    effects.push_back(std::move(effect));
    labels.push_back(x == first
                         ? povm.labels()[first] + "+" + povm.labels()[second]
                         : povm.labels()[x]);
  }
  return Povm(std::move(effects), std::move(labels));
}

ComplexMatrix ParametricModel::derivative(const RealVector& theta,
                                          int j) const {
  if (j < 0 || j >= n_params) {
    throw Error(ErrorKind::BadArgument, "derivative: parameter index");
  }
  ComplexMatrix d;
  if (derivative_at) {
    d = derivative_at(theta, j);
  } else {
    RealVector plus = theta;
    RealVector minus = theta;
    plus[j] += fd_step;
    minus[j] -= fd_step;
    d = (state_at(plus).mat() - state_at(minus).mat()) / (2.0 * fd_step);
  }
  if (hermiticity_defect(d) > tol::kStructural) {
    throw Error(ErrorKind::NonHermitian, "state derivative not Hermitian");
  }
  if (std::abs(d.trace()) > tol::kCompleteness) {
    throw Error(ErrorKind::BadArgument, "state derivative not traceless");
  }
  return d;
}

}  // namespace qregret
