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

#include "qregret/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace qregret {

NelderMeadResult nelder_mead(const std::function<double(const RealVector&)>& f,
                             const RealVector& start,
                             const NelderMeadOptions& options) {
  const int n = static_cast<int>(start.size());
  const double alpha = 1.0;   // reflection
  const double gamma = 2.0;   // expansion
  const double rho = 0.5;     // contraction
  const double sigma = 0.5;   // shrink

  int evals = 0;
  auto eval = [&](const RealVector& x) {
    ++evals;
    return f(x);
  };

  std::vector<RealVector> simplex;
  std::vector<double> value;
  simplex.reserve(n + 1);
  simplex.push_back(start);
  value.push_back(eval(start));
  for (int i = 0; i < n; ++i) {
    RealVector x = start;
    x[i] += options.initial_step;
    simplex.push_back(x);
    value.push_back(eval(x));
  }

  auto order = [&]() {
    std::vector<int> idx(n + 1);
    for (int i = 0; i <= n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return value[a] < value[b]; });
    std::vector<RealVector> s2(n + 1);
    std::vector<double> v2(n + 1);
    for (int i = 0; i <= n; ++i) {
      s2[i] = simplex[idx[i]];
      v2[i] = value[idx[i]];
    }
    simplex.swap(s2);
    value.swap(v2);
  };

  order();
  while (evals < options.max_evaluations &&
         std::abs(value[n] - value[0]) > options.f_tolerance) {
    RealVector centroid = RealVector::Zero(n);
    for (int i = 0; i < n; ++i) centroid += simplex[i];
    centroid /= n;

    RealVector reflected = centroid + alpha * (centroid - simplex[n]);
    const double f_reflected = eval(reflected);
    if (f_reflected < value[0]) {
      RealVector expanded = centroid + gamma * (reflected - centroid);
      const double f_expanded = eval(expanded);
      if (f_expanded < f_reflected) {
        simplex[n] = expanded;
        value[n] = f_expanded;
      } else {
        simplex[n] = reflected;
        value[n] = f_reflected;
      }
    } else if (f_reflected < value[n - 1]) {
      simplex[n] = reflected;
      value[n] = f_reflected;
    } else {
      RealVector contracted = centroid + rho * (simplex[n] - centroid);
      const double f_contracted = eval(contracted);
      if (f_contracted < value[n]) {
        simplex[n] = contracted;
        value[n] = f_contracted;
      } else {
        for (int i = 1; i <= n; ++i) {
          simplex[i] = simplex[0] + sigma * (simplex[i] - simplex[0]);
          value[i] = eval(simplex[i]);
        }
      }
    }
    order();
  }

  return NelderMeadResult{simplex[0], value[0], evals};
}

}  // namespace qregret
