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

#ifndef PADIC_ERRORS_HPP
#define PADIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace padic {

enum class ErrorKind {
  InvalidArgument,
  SpecMismatch,
  NonUnit,
  NonzeroConstantTerm,
  NonUnitDerivative,
  ZeroSeries,
  DivisibilityFailure,
  PrecisionExhausted,
  NotBaseFixed,
  NotStable,
  NoCommutant,
  NoInteriorFixedPoint,
  TruncationTooSmall,
  NotAGroup,
  OrderNotPrimeToP,
  NotInSubring,
  NoSolution,
  ParseError,
};

const char* to_string(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so
// front ends can map it to an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorKind::ParseError,
              what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace padic

#endif  // PADIC_ERRORS_HPP
