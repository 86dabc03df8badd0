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

// Semi-conjugacies F^tau o h = h o G, where F^tau applies the absolute
// Frobenius `twist` times to the coefficients of F.

#ifndef PADIC_SEMICONJ_HPP
#define PADIC_SEMICONJ_HPP

#include <optional>

#include "padic/dynamics.hpp"

namespace padic {

struct SemiConjTriple {
  Series F;
  Series G;
  Series h;
  unsigned twist = 0;
};

struct SemiConjReport {
  bool holds = false;
  std::optional<unsigned> firstFailingDegree;
  // Weierstrass degrees of both sides; compared before the full check.
  std::optional<unsigned> wdegLeft;
  std::optional<unsigned> wdegRight;
};

SemiConjReport verify_semiconj(const SemiConjTriple& t);

// The unique h = cT + O(T^2), c a unit, with F^tau o h = h o G.  Throws
// NonUnit, NoSolution (including mismatched derivatives at degree 1) or
// PrecisionExhausted.  Stamped like commutant.
Series solve_semiconj(const StableNoninvertible& F, const StableNoninvertible& G, const Zq& c,
                      unsigned twist = 0);

struct DualIsogeny {
  Series fcheck;
  unsigned n = 0;
};

// Order-1 case: fcheck = f^-1 and fcheck o f = Q^(o 0) = T, checked before
// returning.  Throws NonUnitDerivative.
DualIsogeny dual_isogeny(const Series& f, const Series& Q);

}  // namespace padic

#endif  // PADIC_SEMICONJ_HPP
