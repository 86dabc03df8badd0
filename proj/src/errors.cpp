// Copyright 2026 The padic-dynamics Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "padic/errors.hpp"

namespace padic {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::SpecMismatch: return "SpecMismatch";
    case ErrorKind::NonUnit: return "NonUnit";
    case ErrorKind::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case ErrorKind::NonUnitDerivative: return "NonUnitDerivative";
    case ErrorKind::ZeroSeries: return "ZeroSeries";
    case ErrorKind::DivisibilityFailure: return "DivisibilityFailure";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::NotBaseFixed: return "NotBaseFixed";
    case ErrorKind::NotStable: return "NotStable";
    case ErrorKind::NoCommutant: return "NoCommutant";
    case ErrorKind::NoInteriorFixedPoint: return "NoInteriorFixedPoint";
    case ErrorKind::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::OrderNotPrimeToP: return "OrderNotPrimeToP";
    case ErrorKind::NotInSubring: return "NotInSubring";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace padic
