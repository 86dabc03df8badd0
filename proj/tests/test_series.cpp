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

#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "padic/log_series.hpp"
#include "padic/parse.hpp"
#include "padic/series.hpp"
#include "util.hpp"

using namespace padic;

namespace {

Series lit(const std::string& s, const Ring& r, unsigned m) { return parse_series_literal(s, r, m); }

}  // namespace

TEST_CASE("composition and inversion") {
  const Ring R = RingSpec::make(5, 1, 10);
  const Series v = lit("T + T^2", R, 12);
  CHECK(compose(v, v) == lit("T + 2T^2 + 2T^3 + T^4", R, 12));
  CHECK(oracle::matches(comp_inverse(v), oracle::inverse_of_t_plus_t2(12)));
  CHECK_KIND(comp_inverse(lit("5T + T^2", R, 12)), NonUnitDerivative);
  CHECK_KIND(comp_inverse(lit("1 + T", R, 12)), NonzeroConstantTerm);
  CHECK_KIND(compose(v, lit("1 + T", R, 12)), NonzeroConstantTerm);
  CHECK(iterate(v, 0) == Series::identity(R, 12));
  CHECK(iterate(v, 3) == compose(v, compose(v, v)));
}

TEST_CASE("compose against a rational oracle") {
  const Ring R = RingSpec::make(3, 1, 12);
  for (long a : {2L, 3L, 5L})
    for (long b : {2L, 4L}) {
      const auto want = oracle::compose(oracle::binomial_minus_one(a, 10), oracle::binomial_minus_one(b, 10), 10);
      const Series got = compose(oracle::to_series(R, oracle::binomial_minus_one(a, 10), 10),
                                 oracle::to_series(R, oracle::binomial_minus_one(b, 10), 10));
      CHECK(oracle::matches(got, want));
      CHECK(oracle::matches(got, oracle::binomial_minus_one(a * b, 10)));
    }
}

TEST_CASE("arithmetic") {
  const Ring R = RingSpec::make(3, 1, 8);
  const Series u = lit("1 + T", R, 10);
  CHECK(u * u.reciprocal() == Series::constant(Zq::one(R), 10));
  CHECK(u.pow(3) - Series::constant(Zq::one(R), 10) == lit("3T + 3T^2 + T^3", R, 10));
  CHECK_KIND(lit("3 + T", R, 10).reciprocal(), NonUnit);
  CHECK(lit("2 + T^2", R, 4).evaluate_polynomial(Zq(R, 3L)) == Zq(R, 11L));
  CHECK(lit("T^3 + 3T^5", R, 8).order() == 3);
  CHECK(lit("T + T^2", R, 5).shift_down() == lit("1 + T", R, 4));
}

TEST_CASE("weierstrass degree and reduction") {
  const Ring R = RingSpec::make(3, 1, 6);
  CHECK(weierstrass_degree(lit("3T + T^3", R, 8)) == std::optional<unsigned>(3));
  CHECK(weierstrass_degree(lit("3T + 9T^2", R, 8)) == std::nullopt);
  CHECK(reduce_mod_p(lit("(1+T)^3 - 1", R, 8)) == lit("T^3", reduce_mod_p(lit("T", R, 8)).ring(), 8));
}

TEST_CASE("newton polygon examples") {
  const Ring R = RingSpec::make(3, 1, 6);
  const NewtonPolygon a = newton_polygon(lit("3 + 2T + T^3", R, 6));
  REQUIRE(a.segments.size() == 2);
  CHECK(a.segments[0] == NewtonSegment{Rational(-1), 1});
  CHECK(a.segments[1] == NewtonSegment{Rational(0), 2});
  CHECK(!a.provisional);
  const NewtonPolygon b = newton_polygon(lit("9 + T^2", R, 6));
  REQUIRE(b.segments.size() == 1);
  CHECK(b.segments[0] == NewtonSegment{Rational(-1), 2});
  const NewtonPolygon c = newton_polygon(lit("27 + 3T + T^3", R, 6));
  REQUIRE(c.segments.size() == 2);
  CHECK(c.segments[0] == NewtonSegment{Rational(-2), 1});
  CHECK(c.segments[1] == NewtonSegment{Rational(-1, 2), 2});
  CHECK_KIND(newton_polygon(Series::zero(R, 5)), ZeroSeries);
}

TEST_CASE("bivariate evaluation") {
  const Ring R = RingSpec::make(5, 1, 6);
  const BiSeries S = BiSeries::x_plus_y(R, 8);
  const Series a = lit("T + 2T^2", R, 8), b = lit("3T^2 + T^5", R, 8);
  CHECK(bi_eval(S, a, b) == a + b);
  BiSeries mult = S;
  mult.set(1, 1, Zq::one(R));
  CHECK(bi_eval(mult, a, b) == a + b + a * b);
  CHECK(bi_eval(BiSeries::embed_x(a, 8), a, b) == compose(a, a));
  CHECK(bi_eval(BiSeries::embed_y(a, 8), a, b) == compose(a, b));
  CHECK(mult.swapped() == mult);
  const auto d = first_difference(mult, S);
  REQUIRE(d.has_value());
  CHECK((d->degree == 2 && d->i == 1 && d->j == 1));
}

TEST_CASE("composition properties on random series") {
  oracle::Gen g(21);
  for (unsigned long p : {2ul, 3ul, 5ul}) {
    const Ring R = RingSpec::make(p, 2, 6);
    for (int t = 0; t < 8; ++t) {
      const Series f = g.series(R, 10, false), h = g.series(R, 10, false), k = g.series(R, 10, false);
      CHECK(compose(f, compose(h, k)) == compose(compose(f, h), k));
      CHECK(compose(f + h, k) == compose(f, k) + compose(h, k));
      CHECK(compose(f * h, k) == compose(f, k) * compose(h, k));
      const Series u = g.series(R, 10, true);
      const Series ui = comp_inverse(u);
      CHECK(compose(u, ui) == Series::identity(R, 10));
      CHECK(compose(ui, u) == Series::identity(R, 10));
      CHECK((f * h).frobenius() == f.frobenius() * h.frobenius());
      CHECK(compose(f, h).frobenius() == compose(f.frobenius(), h.frobenius()));
    }
  }
}

TEST_CASE("weierstrass degree is multiplicative under composition") {
  oracle::Gen g(22);
  const Ring R = RingSpec::make(3, 1, 6);
  for (int t = 0; t < 20; ++t) {
    // Random stable series with Weierstrass degree 1, 3 or 9 below T^30.
    const unsigned d1 = std::vector<unsigned>{1, 3}[g.range(0, 1)];
    const unsigned d2 = std::vector<unsigned>{1, 3}[g.range(0, 1)];
    auto make = [&](unsigned d) {
      Series s = g.series(R, 30, d == 1);
      for (unsigned k = 1; k < d; ++k) s = s.with_coeff(k, s[k].times_p_power(1));
      return s.with_coeff(d, g.unit(R));
    };
    const Series a = make(d1), b = make(d2);
    CHECK(weierstrass_degree(compose(a, b)) == std::optional<unsigned>(d1 * d2));
  }
}

TEST_CASE("newton polygon of a product is the Minkowski sum") {
  oracle::Gen g(23);
  const Ring R = RingSpec::make(3, 1, 12);
  for (int t = 0; t < 20; ++t) {
    // Polynomials whose coefficients are pinned to exact valuations.
    auto make = [&](unsigned deg) {
      std::vector<Zq> c;
      for (unsigned k = 0; k <= deg; ++k)
        c.push_back(g.unit(R).times_p_power(k == deg ? 0 : static_cast<unsigned>(g.range(0, 3))));
      c.resize(16, Zq::zero(R));
      return Series(R, c);
    };
    const Series a = make(static_cast<unsigned>(g.range(1, 4))), b = make(static_cast<unsigned>(g.range(1, 4)));
    auto flat = [](const NewtonPolygon& P) {
      std::vector<std::pair<Rational, unsigned>> out;
      for (const auto& s : P.segments) out.emplace_back(s.slope, s.length);
      return out;
    };
    auto merged = flat(newton_polygon(a));
    for (const auto& s : flat(newton_polygon(b))) merged.push_back(s);
    std::sort(merged.begin(), merged.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<std::pair<Rational, unsigned>> combined;
    for (const auto& s : merged) {
      if (!combined.empty() && combined.back().first == s.first)
        combined.back().second += s.second;
      else
        combined.push_back(s);
    }
    CHECK(flat(newton_polygon(a * b)) == combined);
  }
}

TEST_CASE("newton polygon against a brute-force hull") {
  oracle::Gen g(24);
  const Ring R = RingSpec::make(2, 1, 10);
  for (int t = 0; t < 30; ++t) {
    std::vector<Zq> c;
    std::vector<std::pair<long, long>> pts;
    for (unsigned k = 0; k < 8; ++k) {
      const unsigned v = static_cast<unsigned>(g.range(0, 6));
      const bool zero = k != 7 && g.range(0, 3) == 0;
      c.push_back(zero ? Zq::zero(R) : g.unit(R).times_p_power(v));
      if (!zero) pts.emplace_back(k, v);
    }
    const NewtonPolygon P = newton_polygon(Series(R, c));
    const auto hull = oracle::brute_force_hull(pts);
    REQUIRE(hull.size() == P.segments.size());
    for (std::size_t i = 0; i < hull.size(); ++i) {
      CHECK(mpq_class(P.segments[i].slope.num, P.segments[i].slope.den) == hull[i].slope);
      CHECK(static_cast<long>(P.segments[i].length) == hull[i].length);
    }
  }
}

TEST_CASE("log series bookkeeping") {
  const Ring R = RingSpec::make(3, 1, 8);
  // 3 L = 3T + 3T^2 * (-1/2) + T^3 with scale 1.
  const Series num = lit("3T - 3/2 T^2 + T^3", R, 4);
  const LogSeries L = LogSeries::from_scaled(num, 1, 5);
  CHECK(L.precT() == 4);
  CHECK(L[1].denomExp == 0);
  CHECK(L[3].denomExp == 1);
  CHECK(L.max_denom_exp() == 1);
  CHECK(!first_difference(L, L));
}
