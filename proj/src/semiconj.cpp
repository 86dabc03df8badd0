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

#include "padic/semiconj.hpp"

namespace padic {

SemiConjReport verify_semiconj(const SemiConjTriple& t) {
  const Series lhs = compose(t.F.frobenius(t.twist), t.h);
  const Series rhs = compose(t.h, t.G);
  SemiConjReport rep;
  rep.wdegLeft = weierstrass_degree(lhs);
  rep.wdegRight = weierstrass_degree(rhs);
  rep.firstFailingDegree = first_difference(lhs, rhs);
  rep.holds = rep.wdegLeft == rep.wdegRight && !rep.firstFailingDegree;
  return rep;
}

Series solve_semiconj(const StableNoninvertible& F, const StableNoninvertible& G, const Zq& c,
                      unsigned twist) {
  if (!c.is_unit()) fail(ErrorKind::NonUnit, "h'(0) = " + c.to_string() + " must be a unit");
  const Series Ft = F.P.frobenius(twist);
  if (Ft[1].valuation() != G.lambda.valuation())
    fail(ErrorKind::NoSolution, "degree 1: v(F'(0)) = " + std::to_string(Ft[1].valuation()) +
                                    " differs from v(G'(0)) = " +
                                    std::to_string(G.lambda.valuation()));
  return detail::solve_intertwiner(Ft, G.P, c, ErrorKind::NoSolution);
}

DualIsogeny dual_isogeny(const Series& f, const Series& Q) {
  const Ring ring = common_ring(f.ring(), Q.ring());
  const Series g = f.reduced(ring);
  Series fcheck = comp_inverse(g);
  if (const auto k = first_difference(compose(fcheck, g), iterate(Q.reduced(ring), 0)))
    fail(ErrorKind::PrecisionExhausted,
         "inverse fails to undo f at degree " + std::to_string(*k));
  return DualIsogeny{std::move(fcheck), 0};
}

}  // namespace padic
