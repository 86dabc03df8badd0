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

#include "doctest.h"
#include "oracles.hpp"
#include "padic/condense.hpp"
#include "padic/dynamics.hpp"
#include "padic/parse.hpp"
#include "util.hpp"

using namespace padic;

namespace {

FormalGroup multiplicative(unsigned long p, unsigned N, unsigned M) {
  const Ring R = RingSpec::make(p, 1, N + M - 1);
  return build_formal_group(
      FrobeniusSeries::make(oracle::to_series(R, oracle::binomial_minus_one(static_cast<long>(p), M), M)), M);
}

}  // namespace

TEST_CASE("group validation") {
  const FormalGroup G = multiplicative(5, 6, 12);
  const Ring R = G.frob().series().ring();
  const Zq i = Zq::teichmuller(R, {2});
  CHECK_KIND(norm_series(G, {}), NotAGroup);
  CHECK_KIND(norm_series(G, {Zq(R, 1L), Zq(R, 2L)}), NotAGroup);
  CHECK_KIND(norm_series(G, {Zq(R, 1L), Zq(R, 1L)}), NotAGroup);
  CHECK_KIND(norm_series(G, {Zq(R, 1L), i}), NotAGroup);
  CHECK_KIND(norm_series(G, {Zq(R, 1L), Zq(R, 1L), Zq(R, 1L), Zq(R, 1L), Zq(R, 1L)}), OrderNotPrimeToP);
  CHECK_KIND(norm_series(G, {Zq(RingSpec::make(3, 1, 4), 1L)}), SpecMismatch);
  // Low-precision inputs are lifted to Teichmuller representatives.
  const Ring low = RingSpec::make(5, 1, 2);
  const CondensationSetup s = norm_series(G, {Zq(low, 1L), Zq(low, 7L), Zq(low, 24L), Zq(low, 18L)});
  CHECK(s.d == 4);
  CHECK(s.W[1] == i);
}

TEST_CASE("norm series for mu_4 in the multiplicative group") {
  const FormalGroup G = multiplicative(5, 8, 16);
  const Ring R = G.frob().series().ring();
  const Zq i = Zq::teichmuller(R, {2});
  const CondensationSetup s = norm_series(G, {Zq(R, 1L), i, Zq(R, -1L), -i});
  CHECK(s.d == 4);
  CHECK(s.leading == Zq(s.leading.ring(), -1L));
  CHECK(weierstrass_degree(s.R) == std::optional<unsigned>(4));
  const Series g2 = condense(s, Zq(R, 2L));
  CHECK(g2.precT() == 4);
  CHECK(g2[1] == Zq(g2.ring(), 16L));
  CHECK(condense(s, Zq(R, 2L)) == condense(s, Zq(R, 2L) * i));
}

TEST_CASE("condensation laws over Z_3") {
  const FormalGroup G = multiplicative(3, 8, 16);
  const Ring R = G.frob().series().ring();
  const CondensationSetup s = norm_series(G, {Zq(R, 1L), Zq(R, -1L)});
  CHECK(s.R.precT() == 16);
  CHECK(oracle::matches(condense(s, Zq(R, 3L)), oracle::QPoly{0, 9, -6, 1}));
  const CondensationReport rep = verify_condensation_laws(s, {Zq(R, 2L), Zq(R, -2L), Zq(R, 4L)});
  CHECK(rep.all());
  std::size_t rigidity = 0;
  for (const auto& c : rep.checks) rigidity += c.law == "rigidity";
  CHECK(rigidity > 0);
  // Gamma_3 is stable and commutes with every Gamma_a.
  const Series g3 = condense(s, Zq(R, 3L));
  const Series g2 = condense(s, Zq(R, 2L));
  CHECK(compose(g2, g3) == compose(g3, g2));
  CHECK(StableNoninvertible::make(g3).degree == 3);
}
