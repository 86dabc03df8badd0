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

// Non-archimedean dynamical systems: a stable noninvertible series P with
// P(0) = 0 and 0 < v(P'(0)) < N, and the series commuting with it.

#ifndef PADIC_DYNAMICS_HPP
#define PADIC_DYNAMICS_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "padic/log_series.hpp"
#include "padic/series.hpp"

namespace padic {

struct StableNoninvertible {
  Series P;
  Zq lambda;        // P'(0)
  unsigned degree;  // Weierstrass degree of P

  // Throws NonzeroConstantTerm or NotStable.
  static StableNoninvertible make(Series P);
};

struct LubinLog {
  LogSeries log;
  // Iterate index n at which P^n / lambda^n matched the previous quotient.
  unsigned stopIndex = 0;
};

// L_P = lim P^n(T) / lambda^n, stopped at the first n where two successive
// quotients agree on every coefficient modulo p^effPrec.  Each step consumes
// v(lambda) digits of P's precision; PrecisionExhausted when they run out.
LubinLog lubin_log(const StableNoninvertible& P, unsigned effPrec);

// Digits lost by the degree-by-degree intertwiner solver at truncation M.
unsigned intertwiner_precision_loss(const StableNoninvertible& P);

// The unique g = cT + O(T^2) with g o P = P o g, stamped at
// N - intertwiner_precision_loss(P).  Throws NoCommutant when a degree
// has no solution.
Series commutant(const StableNoninvertible& P, const Zq& c);

struct FixedPointNormalization {
  Zq a;                   // fixed point in the maximal ideal
  Series shifted;         // Q(T + a) - a
  NewtonPolygon polygon;  // of Q(T) - T
};

// Moves the unique fixed point of Q in the maximal ideal to the origin.
// Throws NoInteriorFixedPoint when the Newton polygon of Q(T) - T does not
// start with a single segment of length 1 and negative slope.  The outputs
// are stamped at min(N, M v(a)) - v(Q'(a) - 1), and `shifted` keeps the
// T-degrees whose coefficient does not depend on Q's unknown tail.
FixedPointNormalization normalize_fixed_point(const Series& Q);

// P(0) = 0 and P = T^d mod p, with d a power of p below precT.
bool check_phi_iterate_seed(const Series& P, unsigned long d);

struct LiftDatum {
  Series P;
  std::map<std::string, Series> members;
  // (g, h) -> k means F_g o F_h = F_k.
  std::map<std::pair<std::string, std::string>, std::string> table;
};

struct LiftMemberReport {
  bool regular = false;  // F(0) = 0 and F'(0) a unit
  bool commutesWithP = false;
  std::optional<unsigned> firstFailingDegree;
  Zq eta;  // F'(0)
};

struct LiftTableReport {
  bool respected = false;
  std::optional<unsigned> firstFailingDegree;
  std::string detail;  // set when a label is missing
};

struct LiftDatumReport {
  bool pStable = false;
  std::map<std::string, LiftMemberReport> members;
  std::map<std::pair<std::string, std::string>, LiftTableReport> table;

  bool all_ok() const;
};

LiftDatumReport verify_lift_datum(const LiftDatum& datum);

struct SlopeMultiplicity {
  Rational slope;
  unsigned multiplicity;
  bool operator==(const SlopeMultiplicity& o) const {
    return slope == o.slope && multiplicity == o.multiplicity;
  }
};

// Newton slopes of P^n(T)/T up to its Weierstrass degree: the valuations
// (negated) of the nonzero roots of P^n, with multiplicity.  Throws
// TruncationTooSmall when d^n >= M.
std::vector<SlopeMultiplicity> root_valuation_profile(const StableNoninvertible& P, unsigned n);

namespace detail {

// h = cT + O(T^2) with F o h = h o G, degree by degree.  F'(0) must equal
// G'(0) and be a nonzero non-unit.  `obstruction` is the error kind raised
// when some degree has no solution.
Series solve_intertwiner(const Series& F, const Series& G, const Zq& c, ErrorKind obstruction);

}  // namespace detail

}  // namespace padic

#endif  // PADIC_DYNAMICS_HPP
