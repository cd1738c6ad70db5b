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

#include <stdexcept>
#include <string>

namespace qregret {

enum class ErrorKind {
  // Usage / structural input errors.
  NonSquare,
  BadDims,
  BadArgument,
  DimMismatch,
  TooLarge,
  Mismatch,
  SpecInvalid,
  ModelUnknown,
  // Numerical-contract violations.
  NonHermitian,
  NotPsd,
  NotNormalized,
  DegenerateSupport,
  SingularOutcome,
  NotDominated,
  BadCovariance,
  FlatLikelihood,
  CutoffTooSmall,
};

const char* error_kind_name(ErrorKind kind);

/// True for errors caused by malformed usage (bad shapes, unknown names);
/// false for violated numerical contracts detected on otherwise well-formed
/// inputs. The CLI maps the former to exit code 1 and the latter to 2.
bool is_usage_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qregret
