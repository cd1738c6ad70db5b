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

namespace qregret::tol {

// Tolerance ladder.  Structural checks (Hermiticity, trace, completeness)
// sit at 1e-10/1e-9; quantities derived through eigendecompositions at
// 1e-8; Monte-Carlo quantities carry their own statistical tolerances.

/// Hermiticity, unit trace, PSD floor of states and effects.
inline constexpr double kStructural = 1e-10;

/// POVM completeness and other sum-to-identity checks.
inline constexpr double kCompleteness = 1e-9;

/// Derived numerics (SLD residuals, cross-route agreements, PSD of regret).
inline constexpr double kDerived = 1e-8;

/// lambda_u + lambda_v below this is treated as the kernel when inverting
/// the SLD superoperator; skipped blocks must carry no derivative weight.
inline constexpr double kKernel = 1e-10;

/// Maximum derivative weight allowed on skipped kernel-kernel blocks.
inline constexpr double kKernelWeight = 1e-6;

/// Outcome probabilities at or below this are treated as exact zeros.
inline constexpr double kZeroProbability = 1e-12;

/// Probability derivatives above this on a zero-probability outcome make
/// the Fisher information diverge.
inline constexpr double kZeroProbabilityDerivative = 1e-9;

/// qfim_jj * qfim_kk at or below this flags the pair as degenerate; the
/// incompatibility coefficients are then defined as 0.
inline constexpr double kDegenerateQfim = 1e-14;

/// Truncated models must keep at most this much weight outside the cutoff.
inline constexpr double kTruncationTail = 1e-12;

}  // namespace qregret::tol
