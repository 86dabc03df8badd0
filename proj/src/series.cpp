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

#include "padic/series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace padic {

namespace {

Zq coerce(const Zq& c, const Ring& ring) {
  if (same_ring(c.ring(), ring)) return c;
  return c.reduced(ring);
}

void require_zero_constant(const Series& s, const char* what) {
  if (s.precT() > 0 && !s[0].is_zero())
    fail(ErrorKind::NonzeroConstantTerm, std::string(what) + " has constant term " + s[0].to_string());
}

}  // namespace

// ------------------------------------------------------------------ Series

Series::Series(Ring ring, std::vector<Zq> coeffs) : ring_(std::move(ring)), c_(std::move(coeffs)) {
  for (auto& c : c_) c = coerce(c, ring_);
}

Series Series::zero(const Ring& ring, unsigned precT) {
  return Series(ring, std::vector<Zq>(precT, Zq::zero(ring)));
}

Series Series::identity(const Ring& ring, unsigned precT) {
  return monomial(Zq::one(ring), 1, precT);
}

Series Series::constant(const Zq& c, unsigned precT) {
  return monomial(c, 0, precT);
}

Series Series::monomial(const Zq& c, unsigned k, unsigned precT) {
  Series s = zero(c.ring(), precT);
  if (k < precT) s.c_[k] = c;
  return s;
}

Series Series::from_ints(const Ring& ring, unsigned precT, std::initializer_list<long> coeffs) {
  Series s = zero(ring, precT);
  unsigned k = 0;
  for (long v : coeffs) {
    if (k < precT) s.c_[k] = Zq(ring, v);
    ++k;
  }
  return s;
}

unsigned Series::order() const {
  for (unsigned k = 0; k < c_.size(); ++k)
    if (!c_[k].is_zero()) return k;
  return precT();
}

Series Series::truncated(unsigned m) const {
  if (m >= precT()) return *this;
  return Series(ring_, std::vector<Zq>(c_.begin(), c_.begin() + m));
}

Series Series::reduced(const Ring& lower) const {
  if (same_ring(ring_, lower)) return *this;
  std::vector<Zq> c;
  c.reserve(c_.size());
  for (const auto& x : c_) c.push_back(x.reduced(lower));
  return Series(lower, std::move(c));
}

Series Series::with_coeff(unsigned k, const Zq& c) const {
  Series s = *this;
  if (k < precT()) s.c_[k] = coerce(c, ring_);
  return s;
}

Series Series::shift_down() const {
  require_zero_constant(*this, "f");
  if (c_.empty()) return *this;
  return Series(ring_, std::vector<Zq>(c_.begin() + 1, c_.end()));
}

Series Series::operator+(const Series& o) const {
  const Ring r = common_ring(ring_, o.ring_);
  const unsigned m = std::min(precT(), o.precT());
  std::vector<Zq> c;
  c.reserve(m);
  for (unsigned k = 0; k < m; ++k) c.push_back(coerce(c_[k], r) + coerce(o.c_[k], r));
  return Series(r, std::move(c));
}

Series Series::operator-(const Series& o) const {
  const Ring r = common_ring(ring_, o.ring_);
  const unsigned m = std::min(precT(), o.precT());
  std::vector<Zq> c;
  c.reserve(m);
  for (unsigned k = 0; k < m; ++k) c.push_back(coerce(c_[k], r) - coerce(o.c_[k], r));
  return Series(r, std::move(c));
}

Series Series::operator*(const Series& o) const {
  const Ring r = common_ring(ring_, o.ring_);
  const Series a = reduced(r);
  const Series b = o.reduced(r);
  const unsigned m = std::min(precT(), o.precT());
  const unsigned oa = a.order();
  const unsigned ob = b.order();
  std::vector<Zq> c(m, Zq::zero(r));
  ZqAccumulator acc(r);
  for (unsigned k = oa + ob; k < m; ++k) {
    acc.clear();
    for (unsigned i = oa; i + ob <= k; ++i) {
      if (a.c_[i].is_zero()) continue;
      acc.addmul(a.c_[i], b.c_[k - i]);
    }
    c[k] = acc.result();
  }
  return Series(r, std::move(c));
}

Series Series::operator-() const {
  std::vector<Zq> c;
  c.reserve(c_.size());
  for (const auto& x : c_) c.push_back(-x);
  return Series(ring_, std::move(c));
}

Series Series::scaled(const Zq& s) const {
  const Ring r = common_ring(ring_, s.ring());
  const Zq k = coerce(s, r);
  std::vector<Zq> c;
  c.reserve(c_.size());
  for (const auto& x : c_) c.push_back(coerce(x, r) * k);
  return Series(r, std::move(c));
}

Series Series::reciprocal() const {
  if (c_.empty()) return *this;
  const Zq inv0 = c_[0].inverse();
  std::vector<Zq> b(precT(), Zq::zero(ring_));
  b[0] = inv0;
  ZqAccumulator acc(ring_);
  for (unsigned k = 1; k < precT(); ++k) {
    acc.clear();
    for (unsigned i = 1; i <= k; ++i) acc.addmul(c_[i], b[k - i]);
    b[k] = -(acc.result() * inv0);
  }
  return Series(ring_, std::move(b));
}

Series Series::pow(unsigned long e) const {
  Series result = constant(Zq::one(ring_), precT());
  Series base = *this;
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Series Series::frobenius(unsigned k) const {
  if (ring_->f() == 1) return *this;
  std::vector<Zq> c;
  c.reserve(c_.size());
  for (const auto& x : c_) c.push_back(x.frobenius(k));
  return Series(ring_, std::move(c));
}

Zq Series::evaluate_polynomial(const Zq& x) const {
  const Zq xx = coerce(x, ring_);
  Zq acc = Zq::zero(ring_);
  for (unsigned k = precT(); k-- > 0;) acc = acc * xx + c_[k];
  return acc;
}

bool Series::operator==(const Series& o) const {
  return same_ring(ring_, o.ring_) && c_ == o.c_;
}

std::string Series::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (unsigned k = 0; k < precT(); ++k) {
    if (c_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const std::string c = c_[k].to_string();
    if (k == 0) {
      os << c;
    } else {
      if (c != "1") os << c << "*";
      os << "T";
      if (k > 1) os << "^" << k;
    }
  }
  if (first) os << "0";
  os << " + O(T^" << precT() << ")";
  return os.str();
}

std::optional<unsigned> first_difference(const Series& a, const Series& b) {
  const Ring r = common_ring(a.ring(), b.ring());
  const unsigned m = std::min(a.precT(), b.precT());
  for (unsigned k = 0; k < m; ++k)
    if (coerce(a[k], r) != coerce(b[k], r)) return k;
  return std::nullopt;
}

Series compose(const Series& outer, const Series& inner) {
  const Ring r = common_ring(outer.ring(), inner.ring());
  const Series in = inner.reduced(r);
  const Series out = outer.reduced(r);
  require_zero_constant(in, "inner series");
  const unsigned ord = in.order();
  unsigned m = in.precT();
  if (ord < in.precT()) {
    const unsigned long bound = static_cast<unsigned long>(out.precT()) * ord;
    if (bound < m) m = static_cast<unsigned>(bound);
  }
  const Series g = in.truncated(m);
  const unsigned top = std::min(out.precT(), m);
  if (top == 0) return Series::zero(r, m);
  Series acc = Series::constant(out[top - 1], m);
  for (unsigned k = top - 1; k-- > 0;) {
    acc = acc * g;
    std::vector<Zq> c = acc.coeffs();
    c[0] += out[k];
    acc = Series(r, std::move(c));
  }
  return acc;
}

Series comp_inverse(const Series& f) {
  const unsigned m = f.precT();
  if (m < 2) fail(ErrorKind::InvalidArgument, "comp_inverse needs precT >= 2");
  require_zero_constant(f, "f");
  if (!f[1].is_unit())
    fail(ErrorKind::NonUnitDerivative, "f'(0) = " + f[1].to_string() + " is not a unit");
  const Ring& r = f.ring();
  const Zq u = f[1].inverse();
  std::vector<Zq> g(m, Zq::zero(r));
  g[1] = u;
  // Degree n of f(g) is f'(0) g_n plus terms in g_1 .. g_(n-1).
  for (unsigned n = 2; n < m; ++n) {
    const Series partial(r, std::vector<Zq>(g.begin(), g.begin() + n + 1));
    const Zq c = compose(f.truncated(n + 1), partial)[n];
    g[n] = -(c * u);
  }
  return Series(r, std::move(g));
}

Series iterate(const Series& f, unsigned n) {
  require_zero_constant(f, "f");
  Series result = Series::identity(f.ring(), f.precT());
  for (unsigned i = 0; i < n; ++i) result = compose(f, result);
  return result;
}

std::optional<unsigned> weierstrass_degree(const Series& f) {
  for (unsigned k = 0; k < f.precT(); ++k)
    if (f[k].is_unit()) return k;
  return std::nullopt;
}

Series reduce_mod_p(const Series& f) {
  return f.reduced(f.ring()->with_precision(1));
}

// ---------------------------------------------------------------- Rational

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (den == 0) fail(ErrorKind::InvalidArgument, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

bool Rational::operator<(const Rational& o) const {
  return static_cast<__int128>(num) * o.den < static_cast<__int128>(o.num) * den;
}

std::string Rational::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

// ----------------------------------------------------------- NewtonPolygon

NewtonPolygon newton_polygon(const Series& f) {
  const unsigned cap = f.precN();
  std::vector<std::pair<unsigned, unsigned>> pts;
  std::vector<unsigned> skipped;
  for (unsigned k = 0; k < f.precT(); ++k) {
    const unsigned v = f[k].valuation();
    if (v < cap)
      pts.emplace_back(k, v);
    else
      skipped.push_back(k);
  }
  if (pts.empty()) fail(ErrorKind::ZeroSeries, "every coefficient vanishes at precision N");

  auto cross = [](std::pair<unsigned, unsigned> a, std::pair<unsigned, unsigned> b,
                  std::pair<unsigned, unsigned> c) {
    const long long bx = static_cast<long long>(b.first) - a.first;
    const long long by = static_cast<long long>(b.second) - a.second;
    const long long cx = static_cast<long long>(c.first) - a.first;
    const long long cy = static_cast<long long>(c.second) - a.second;
    return bx * cy - by * cx;
  };
  std::vector<std::pair<unsigned, unsigned>> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0) hull.pop_back();
    hull.push_back(pt);
  }

  NewtonPolygon poly;
  poly.vertices = hull;
  for (std::size_t i = 1; i < hull.size(); ++i) {
    const auto [k0, v0] = hull[i - 1];
    const auto [k1, v1] = hull[i];
    poly.segments.push_back(
        {Rational(static_cast<std::int64_t>(v1) - static_cast<std::int64_t>(v0),
                  static_cast<std::int64_t>(k1 - k0)),
         k1 - k0});
  }

  for (unsigned k : skipped) {
    if (k < hull.front().first) {
      poly.provisional = true;
      break;
    }
    if (k > hull.back().first) continue;
    for (std::size_t i = 1; i < hull.size(); ++i) {
      const auto [k0, v0] = hull[i - 1];
      const auto [k1, v1] = hull[i];
      if (k < k0 || k > k1) continue;
      // (k, cap) strictly below the segment?
      const long long lhs = static_cast<long long>(cap) * (k1 - k0);
      const long long rhs = static_cast<long long>(v0) * (k1 - k0) +
                            (static_cast<long long>(v1) - v0) * (k - k0);
      if (lhs < rhs) poly.provisional = true;
      break;
    }
    if (poly.provisional) break;
  }
  return poly;
}

// ---------------------------------------------------------------- BiSeries

BiSeries::BiSeries(Ring ring, unsigned precD)
    : ring_(std::move(ring)),
      precD_(precD),
      c_(static_cast<std::size_t>(precD) * (precD + 1) / 2, Zq::zero(ring_)) {}

std::size_t BiSeries::index(unsigned i, unsigned j) const {
  if (i + j >= precD_) fail(ErrorKind::InvalidArgument, "bivariate index beyond truncation");
  const std::size_t row = static_cast<std::size_t>(i) * precD_ -
                          static_cast<std::size_t>(i) * (i - 1) / 2;
  return row + j;
}

BiSeries BiSeries::x_plus_y(const Ring& ring, unsigned precD) {
  BiSeries s(ring, precD);
  if (precD > 1) {
    s.set(1, 0, Zq::one(ring));
    s.set(0, 1, Zq::one(ring));
  }
  return s;
}

BiSeries BiSeries::embed_x(const Series& f, unsigned precD) {
  BiSeries s(f.ring(), precD);
  for (unsigned k = 0; k < std::min(precD, f.precT()); ++k) s.set(k, 0, f[k]);
  return s.truncated(std::min(precD, f.precT()));
}

BiSeries BiSeries::embed_y(const Series& f, unsigned precD) {
  return embed_x(f, precD).swapped();
}

unsigned BiSeries::order() const {
  for (unsigned d = 0; d < precD_; ++d)
    for (unsigned i = 0; i <= d; ++i)
      if (!at(i, d - i).is_zero()) return d;
  return precD_;
}

BiSeries BiSeries::truncated(unsigned m) const {
  if (m >= precD_) return *this;
  BiSeries s(ring_, m);
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = 0; i + j < m; ++j) s.set(i, j, at(i, j));
  return s;
}

BiSeries BiSeries::reduced(const Ring& lower) const {
  if (same_ring(ring_, lower)) return *this;
  BiSeries s(lower, precD_);
  for (std::size_t k = 0; k < c_.size(); ++k) s.c_[k] = c_[k].reduced(lower);
  return s;
}

BiSeries BiSeries::swapped() const {
  BiSeries s(ring_, precD_);
  for (unsigned i = 0; i < precD_; ++i)
    for (unsigned j = 0; i + j < precD_; ++j) s.set(j, i, at(i, j));
  return s;
}

BiSeries BiSeries::frobenius(unsigned k) const {
  if (ring_->f() == 1) return *this;
  BiSeries s = *this;
  for (auto& c : s.c_) c = c.frobenius(k);
  return s;
}

BiSeries BiSeries::operator+(const BiSeries& o) const {
  const Ring r = common_ring(ring_, o.ring_);
  const unsigned m = std::min(precD_, o.precD_);
  BiSeries a = truncated(m).reduced(r);
  const BiSeries b = o.truncated(m).reduced(r);
  for (std::size_t k = 0; k < a.c_.size(); ++k) a.c_[k] += b.c_[k];
  return a;
}

BiSeries BiSeries::operator-(const BiSeries& o) const {
  const Ring r = common_ring(ring_, o.ring_);
  const unsigned m = std::min(precD_, o.precD_);
  BiSeries a = truncated(m).reduced(r);
  const BiSeries b = o.truncated(m).reduced(r);
  for (std::size_t k = 0; k < a.c_.size(); ++k) a.c_[k] -= b.c_[k];
  return a;
}

BiSeries BiSeries::operator*(const BiSeries& o) const {
  const Ring r = common_ring(ring_, o.ring_);
  const unsigned m = std::min(precD_, o.precD_);
  const BiSeries a = truncated(m).reduced(r);
  const BiSeries b = o.truncated(m).reduced(r);
  const unsigned oa = a.order();
  const unsigned ob = b.order();
  BiSeries out(r, m);
  ZqAccumulator acc(r);
  for (unsigned d = oa + ob; d < m; ++d) {
    for (unsigned i = 0; i <= d; ++i) {
      const unsigned j = d - i;
      acc.clear();
      bool any = false;
      for (unsigned i1 = 0; i1 <= i; ++i1) {
        for (unsigned j1 = 0; j1 <= j; ++j1) {
          const unsigned d1 = i1 + j1;
          if (d1 < oa || d - d1 < ob) continue;
          const Zq& x = a.at(i1, j1);
          if (x.is_zero()) continue;
          acc.addmul(x, b.at(i - i1, j - j1));
          any = true;
        }
      }
      if (any) out.set(i, j, acc.result());
    }
  }
  return out;
}

BiSeries BiSeries::scaled(const Zq& s) const {
  const Ring r = common_ring(ring_, s.ring());
  BiSeries out = reduced(r);
  const Zq k = coerce(s, r);
  for (auto& c : out.c_) c *= k;
  return out;
}

bool BiSeries::operator==(const BiSeries& o) const {
  return precD_ == o.precD_ && same_ring(ring_, o.ring_) && c_ == o.c_;
}

std::string BiSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (unsigned d = 0; d < precD_; ++d) {
    for (unsigned i = d + 1; i-- > 0;) {
      const unsigned j = d - i;
      const Zq& c = at(i, j);
      if (c.is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      const std::string cs = c.to_string();
      if (d == 0 || cs != "1") os << cs << (d ? "*" : "");
      if (i) os << "X" << (i > 1 ? "^" + std::to_string(i) : "");
      if (i && j) os << "*";
      if (j) os << "Y" << (j > 1 ? "^" + std::to_string(j) : "");
    }
  }
  if (first) os << "0";
  os << " + O(deg " << precD_ << ")";
  return os.str();
}

std::optional<BiDifference> first_difference(const BiSeries& a, const BiSeries& b) {
  const Ring r = common_ring(a.ring(), b.ring());
  const unsigned m = std::min(a.precD(), b.precD());
  for (unsigned d = 0; d < m; ++d)
    for (unsigned i = 0; i <= d; ++i)
      if (coerce(a.at(i, d - i), r) != coerce(b.at(i, d - i), r)) return BiDifference{d, i, d - i};
  return std::nullopt;
}

namespace {

unsigned composed_precision(unsigned inner_prec, unsigned outer_prec, unsigned ord) {
  if (ord >= inner_prec) return inner_prec;
  const unsigned long bound = static_cast<unsigned long>(outer_prec) * ord;
  return bound < inner_prec ? static_cast<unsigned>(bound) : inner_prec;
}

}  // namespace

Series bi_eval(const BiSeries& S, const Series& a, const Series& b) {
  Ring r = common_ring(common_ring(S.ring(), a.ring()), b.ring());
  const Series x = a.reduced(r);
  const Series y = b.reduced(r);
  require_zero_constant(x, "first argument");
  require_zero_constant(y, "second argument");
  const unsigned ord = std::min(x.order(), y.order());
  const unsigned m = composed_precision(std::min(x.precT(), y.precT()), S.precD(), ord);
  const Series xs = x.truncated(m);
  const Series ys = y.truncated(m);
  const BiSeries s = S.reduced(r);
  const unsigned top = std::min(S.precD(), m);
  std::vector<Series> ypow{Series::constant(Zq::one(r), m)};
  for (unsigned j = 1; j < top; ++j) ypow.push_back(ypow.back() * ys);
  // Horner in x over rows sum_j S_ij y^j.
  Series acc = Series::zero(r, m);
  for (unsigned i = top; i-- > 0;) {
    acc = acc * xs;
    std::vector<Zq> c = acc.coeffs();
    for (unsigned j = 0; i + j < top; ++j) {
      const Zq& sij = s.at(i, j);
      if (sij.is_zero()) continue;
      for (unsigned k = 0; k < m; ++k) c[k] += sij * ypow[j][k];
    }
    acc = Series(r, std::move(c));
  }
  return acc;
}

BiSeries bi_compose(const BiSeries& S, const BiSeries& A, const BiSeries& B) {
  const Ring r = common_ring(common_ring(S.ring(), A.ring()), B.ring());
  const BiSeries a0 = A.reduced(r);
  const BiSeries b0 = B.reduced(r);
  if (!a0.at(0, 0).is_zero() || !b0.at(0, 0).is_zero())
    fail(ErrorKind::NonzeroConstantTerm, "bivariate arguments must vanish at the origin");
  const unsigned ord = std::min(a0.order(), b0.order());
  const unsigned m = composed_precision(std::min(a0.precD(), b0.precD()), S.precD(), ord);
  const BiSeries a = a0.truncated(m);
  const BiSeries b = b0.truncated(m);
  const BiSeries s = S.reduced(r);
  const unsigned top = std::min(S.precD(), m);
  BiSeries one(r, m);
  if (m > 0) one.set(0, 0, Zq::one(r));
  std::vector<BiSeries> bpow{one};
  for (unsigned j = 1; j < top; ++j) bpow.push_back(bpow.back() * b);
  BiSeries acc(r, m);
  for (unsigned i = top; i-- > 0;) {
    acc = acc * a;
    for (unsigned j = 0; i + j < top; ++j) {
      const Zq& sij = s.at(i, j);
      if (sij.is_zero()) continue;
      acc = acc + bpow[j].scaled(sij);
    }
  }
  return acc;
}

BiSeries compose(const Series& g, const BiSeries& S) {
  const Ring r = common_ring(g.ring(), S.ring());
  const BiSeries s0 = S.reduced(r);
  if (!s0.at(0, 0).is_zero())
    fail(ErrorKind::NonzeroConstantTerm, "inner bivariate series must vanish at the origin");
  const unsigned m = composed_precision(s0.precD(), g.precT(), s0.order());
  const BiSeries s = s0.truncated(m);
  const Series outer = g.reduced(r);
  const unsigned top = std::min(outer.precT(), m);
  BiSeries acc(r, m);
  for (unsigned k = top; k-- > 0;) {
    acc = acc * s;
    if (m > 0) acc.set(0, 0, acc.at(0, 0) + outer[k]);
  }
  return acc;
}

BiSeries bi_eval_separate(const BiSeries& S, const Series& f, const Series& g) {
  const Ring r = common_ring(common_ring(S.ring(), f.ring()), g.ring());
  const Series x = f.reduced(r);
  const Series y = g.reduced(r);
  require_zero_constant(x, "first argument");
  require_zero_constant(y, "second argument");
  const unsigned ord = std::min(x.order(), y.order());
  const unsigned m = composed_precision(std::min(x.precT(), y.precT()), S.precD(), ord);
  const unsigned top = std::min(S.precD(), m);
  const BiSeries s = S.reduced(r);
  std::vector<Series> fp{Series::constant(Zq::one(r), m)};
  std::vector<Series> gp{Series::constant(Zq::one(r), m)};
  const Series xs = x.truncated(m);
  const Series ys = y.truncated(m);
  for (unsigned i = 1; i < top; ++i) {
    fp.push_back(fp.back() * xs);
    gp.push_back(gp.back() * ys);
  }
  // U[i][b] = sum_j S_ij [Y^b] g^j, then out[a][b] = sum_i [X^a] f^i U[i][b].
  std::vector<std::vector<Zq>> U(top, std::vector<Zq>(m, Zq::zero(r)));
  ZqAccumulator acc(r);
  for (unsigned i = 0; i < top; ++i) {
    for (unsigned bdeg = 0; bdeg < m; ++bdeg) {
      acc.clear();
      bool any = false;
      for (unsigned j = 0; i + j < top && j <= bdeg; ++j) {
        const Zq& sij = s.at(i, j);
        if (sij.is_zero()) continue;
        acc.addmul(sij, gp[j][bdeg]);
        any = true;
      }
      if (any) U[i][bdeg] = acc.result();
    }
  }
  BiSeries out(r, m);
  for (unsigned adeg = 0; adeg < m; ++adeg) {
    for (unsigned bdeg = 0; adeg + bdeg < m; ++bdeg) {
      acc.clear();
      bool any = false;
      for (unsigned i = 0; i < top && i <= adeg; ++i) {
        const Zq& fa = fp[i][adeg];
        if (fa.is_zero()) continue;
        acc.addmul(fa, U[i][bdeg]);
        any = true;
      }
      if (any) out.set(adeg, bdeg, acc.result());
    }
  }
  return out;
}

}  // namespace padic
