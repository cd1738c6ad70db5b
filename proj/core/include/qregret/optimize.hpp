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

#include <functional>

#include "qregret/linalg.hpp"

namespace qregret {

struct NelderMeadOptions {
  double initial_step = 0.1;
  int max_evaluations = 500;
  double f_tolerance = 1e-12;
};

struct NelderMeadResult {
  RealVector x;
  double value = 0.0;
  int evaluations = 0;
};

/// Downhill-simplex minimization of f.  Shared by the frontier tracer and
/// the grid-MLE refinement; no gradients, fixed evaluation budget.
NelderMeadResult nelder_mead(const std::function<double(const RealVector&)>& f,
                             const RealVector& start,
                             const NelderMeadOptions& options = {});

}  // namespace qregret
