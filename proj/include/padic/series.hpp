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

// Truncated power series over Z_q.
//
// A Series with precision pair (N, M) stands for every series whose first M
// coefficients agree with it modulo p^N.  Operations never report digits they
// cannot justify: mixed operands are cut down to the smaller precision, and
// composition reports the T-precision that the truncated outer series really
// determines.

#ifndef PADIC_SERIES_HPP
#define PADIC_SERIES_HPP

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "padic/zq.hpp"

namespace padic {

class Series {
 public:
  Series() = default;
  Series(Ring ring, std::vector<Zq> coeffs);

  static Series zero(const Ring& ring, unsigned precT);
  static Series identity(const Ring& ring, unsigned precT);
  static Series constant(const Zq& c, unsigned precT);
  static Series monomial(const Zq& c, unsigned k, unsigned precT);
  static Series from_ints(const Ring& ring, unsigned precT, std::initializer_list<long> coeffs);

  const Ring& ring() const noexcept { return ring_; }
  unsigned precN() const noexcept { return ring_->precN(); }
  unsigned precT() const noexcept { return static_cast<unsigned>(c_.size()); }
  const Zq& operator[](unsigned k) const { return c_.at(k); }
  const std::vector<Zq>& coeffs() const noexcept { return c_; }

  // Index of the first coefficient nonzero mod p^N; precT() if none.
  unsigned order() const;
  bool is_zero() const { return order() == precT(); }

  Series truncated(unsigned precT) const;
  Series reduced(const Ring& lower) const;
  Series with_coeff(unsigned k, const Zq& c) const;
  // f(T)/T; requires f(0) = 0 and loses one T-digit.
  Series shift_down() const;

  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const;
  Series operator*(const Series& o) const;
  Series operator-() const;
  Series scaled(const Zq& c) const;
  // Multiplicative inverse; requires a unit constant term.
  Series reciprocal() const;
  Series pow(unsigned long e) const;

  // Coefficientwise Frobenius, k-fold.
  Series frobenius(unsigned k = 1) const;
  // Value of the truncation as a polynomial at x.
  Zq evaluate_polynomial(const Zq& x) const;

  // Exact structural equality: same ring, same precT, same coefficients.
  bool operator==(const Series& o) const;
  bool operator!=(const Series& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  Ring ring_;
  std::vector<Zq> c_;
};

// Lowest degree where a and b differ at their common precision, or nullopt.
std::optional<unsigned> first_difference(const Series& a, const Series& b);
inline bool agree(const Series& a, const Series& b) { return !first_difference(a, b); }

// outer(inner(T)).  inner(0) must vanish mod p^N.  The result has
// precT = min(precT(inner), precT(outer) * order(inner)).
Series compose(const Series& outer, const Series& inner);
// g with g(f(T)) = f(g(T)) = T.  Throws NonUnitDerivative.
Series comp_inverse(const Series& f);
// n-fold self-composition; iterate(f, 0) = T.
Series iterate(const Series& f, unsigned n);
// Smallest k with a unit coefficient of T^k, nullopt for "infinite".
std::optional<unsigned> weierstrass_degree(const Series& f);
// Coefficientwise reduction; the result lives in the precision-1 ring.
Series reduce_mod_p(const Series& f);

// ----------------------------------------------------------------- Rational

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1);

  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;
  std::string to_string() const;
};

// ----------------------------------------------------------- NewtonPolygon

struct NewtonSegment {
  Rational slope;
  unsigned length = 0;
  bool operator==(const NewtonSegment& o) const {
    return slope == o.slope && length == o.length;
  }
};

struct NewtonPolygon {
  // (degree, valuation), strictly increasing degree.
  std::vector<std::pair<unsigned, unsigned>> vertices;
  // Slopes strictly increase from one segment to the next.
  std::vector<NewtonSegment> segments;
  // Set when a coefficient that is zero at precision N could have produced
  // a point strictly below the computed hull.
  bool provisional = false;
};

// Lower convex hull of {(k, v(a_k))} over coefficients nonzero mod p^N.
// Slope is rise over run, so a root of valuation s shows up as slope -s.
// Throws ZeroSeries.
NewtonPolygon newton_polygon(const Series& f);

// ---------------------------------------------------------------- BiSeries

// Bivariate series truncated by total degree: coefficients of X^i Y^j with
// i + j < precD.
class BiSeries {
 public:
  BiSeries() = default;
  BiSeries(Ring ring, unsigned precD);

  static BiSeries x_plus_y(const Ring& ring, unsigned precD);
  // f(X) or f(Y) viewed as a bivariate series.
  static BiSeries embed_x(const Series& f, unsigned precD);
  static BiSeries embed_y(const Series& f, unsigned precD);

  const Ring& ring() const noexcept { return ring_; }
  unsigned precN() const noexcept { return ring_->precN(); }
  unsigned precD() const noexcept { return precD_; }

  const Zq& at(unsigned i, unsigned j) const { return c_[index(i, j)]; }
  void set(unsigned i, unsigned j, Zq v) { c_[index(i, j)] = std::move(v); }

  // Lowest total degree with a nonzero coefficient; precD() if none.
  unsigned order() const;

  BiSeries truncated(unsigned precD) const;
  BiSeries reduced(const Ring& lower) const;
  BiSeries swapped() const;
  BiSeries frobenius(unsigned k = 1) const;

  BiSeries operator+(const BiSeries& o) const;
  BiSeries operator-(const BiSeries& o) const;
  BiSeries operator*(const BiSeries& o) const;
  BiSeries scaled(const Zq& c) const;

  bool operator==(const BiSeries& o) const;
  bool operator!=(const BiSeries& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  std::size_t index(unsigned i, unsigned j) const;

  Ring ring_;
  unsigned precD_ = 0;
  std::vector<Zq> c_;  // row i holds j = 0 .. precD - 1 - i
};

// Lowest total degree where a and b differ, with the offending (i, j).
struct BiDifference {
  unsigned degree;
  unsigned i;
  unsigned j;
};
std::optional<BiDifference> first_difference(const BiSeries& a, const BiSeries& b);

// S(a(T), b(T)); a(0) = b(0) = 0.
Series bi_eval(const BiSeries& S, const Series& a, const Series& b);
// S(A(X,Y), B(X,Y)); A and B without constant term.
BiSeries bi_compose(const BiSeries& S, const BiSeries& A, const BiSeries& B);
// g(S(X,Y)) for univariate g; S without constant term.
BiSeries compose(const Series& g, const BiSeries& S);
// S(f(X), g(Y)) for univariate f, g: cheaper than bi_compose.
BiSeries bi_eval_separate(const BiSeries& S, const Series& f, const Series& g);

}  // namespace padic

#endif  // PADIC_SERIES_HPP
