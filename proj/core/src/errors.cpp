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

#include "qregret/errors.hpp"

namespace qregret {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::BadDims: return "BadDims";
    case ErrorKind::BadArgument: return "BadArgument";
    case ErrorKind::DimMismatch: return "DimMismatch";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::Mismatch: return "Mismatch";
    case ErrorKind::SpecInvalid: return "SpecInvalid";
    case ErrorKind::ModelUnknown: return "ModelUnknown";
    case ErrorKind::NonHermitian: return "NonHermitian";
    case ErrorKind::NotPsd: return "NotPsd";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::DegenerateSupport: return "DegenerateSupport";
    case ErrorKind::SingularOutcome: return "SingularOutcome";
    case ErrorKind::NotDominated: return "NotDominated";
    case ErrorKind::BadCovariance: return "BadCovariance";
    case ErrorKind::FlatLikelihood: return "FlatLikelihood";
    case ErrorKind::CutoffTooSmall: return "CutoffTooSmall";
  }
  return "UnknownError";
}

bool is_usage_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonSquare:
    case ErrorKind::BadDims:
    case ErrorKind::BadArgument:
    case ErrorKind::DimMismatch:
    case ErrorKind::TooLarge:
    case ErrorKind::Mismatch:
    case ErrorKind::SpecInvalid:
    case ErrorKind::ModelUnknown:
      return true;
    default:
      return false;
  }
}

}  // namespace qregret
