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

// Quotient of a Lubin-Tate system by a finite group W of roots of unity of
// order prime to p: the norm series R = prod [w] and the series Gamma_a
// with Gamma_a o R = R o [a].

#ifndef PADIC_CONDENSE_HPP
#define PADIC_CONDENSE_HPP

#include <optional>
#include <string>
#include <vector>

#include "padic/formal_group.hpp"

namespace padic {

struct CondensationSetup {
  FormalGroup G;
  // Teichmuller lifts at the working precision of G.
  std::vector<Zq> W;
  unsigned d = 0;
  Series R;
  Zq leading;  // coefficient of T^d, the product of W
};

// Each w must satisfy w^|W| = 1 in its own ring; it is replaced by the
// Teichmuller lift of its residue.  Throws NotAGroup or OrderNotPrimeToP.
CondensationSetup norm_series(const FormalGroup& G, const std::vector<Zq>& W);

// Gamma_a, by peeling powers of R off R o [a].  precT = floor(M / d).
// Throws NotInSubring when R o [a] is not a series in R.
Series condense(const CondensationSetup& setup, const Zq& a);

struct CondensationCheck {
  std::string law;  // "composition", "derivative" or "rigidity"
  std::string args;
  bool holds = false;
  std::optional<unsigned> firstFailingDegree;
};

struct CondensationReport {
  std::vector<CondensationCheck> checks;
  bool all() const;
};

// Gamma_a o Gamma_b = Gamma_ab for every ordered pair, Gamma_a'(0) = a^d,
// and Gamma_a = Gamma_b whenever a^d = b^d.
CondensationReport verify_condensation_laws(const CondensationSetup& setup,
                                            const std::vector<Zq>& samples);

}  // namespace padic

#endif  // PADIC_CONDENSE_HPP
