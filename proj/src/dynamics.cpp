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

#include "padic/dynamics.hpp"

#include <algorithm>

namespace padic {

namespace {

// Representative of c in `ring`: reduced when c is finer, lifted by its
// integer coordinates when c is coarser.
Zq into_ring(const Zq& c, const Ring& ring) {
  if (same_ring(c.ring(), ring)) return c;
  if (!c.ring()->same_field(*ring)) fail(ErrorKind::SpecMismatch, "constant from a different ring");
  return Zq(ring, c.coords());
}

}  // namespace

StableNoninvertible StableNoninvertible::make(Series P) {
  if (P.precT() < 2) fail(ErrorKind::NotStable, "need at least the linear coefficient");
  if (!P[0].is_zero())
    fail(ErrorKind::NonzeroConstantTerm, "P(0) = " + P[0].to_string());
  Zq lambda = P[1];
  const unsigned v = lambda.valuation();
  if (v == 0) fail(ErrorKind::NotStable, "P'(0) = " + lambda.to_string() + " is a unit");
  if (v >= P.precN()) fail(ErrorKind::NotStable, "P'(0) vanishes at precision N");
  const auto d = weierstrass_degree(P);
  if (!d) fail(ErrorKind::NotStable, "P has no unit coefficient below the truncation");
  return StableNoninvertible{std::move(P), std::move(lambda), *d};
}

// ---------------------------------------------------------------- log

LubinLog lubin_log(const StableNoninvertible& sys, unsigned effPrec) {
  if (effPrec < 1) fail(ErrorKind::InvalidArgument, "effective precision must be >= 1");
  const Series& P = sys.P;
  const unsigned W = P.precN();
  const unsigned v = sys.lambda.valuation();
  const Zq u_inv = sys.lambda.divide_by_p_power(v).inverse();

  Series iter = P;
  Zq scale = u_inv;  // u^-n
  Series prev;       // previous numerators, at scale p^((n-1)v)
  for (unsigned n = 1;; ++n) {
    if (effPrec + n * v > W)
      fail(ErrorKind::PrecisionExhausted,
           "P^n/lambda^n did not stabilise mod p^" + std::to_string(effPrec) + " before n = " +
               std::to_string(n) + " consumed the " + std::to_string(W) + " available digits");
    // iter = P^n; numerators X_n = P^n u^-n, and L_n = X_n / p^(nv).
    const Series cur = iter.scaled(scale);
    if (n >= 2) {
      // L_n = L_(n-1)  <=>  X_n = p^v X_(n-1)  mod p^(effPrec + nv).
      const Ring cmp = P.ring()->with_precision(effPrec + n * v);
      const Series lhs = cur.reduced(cmp);
      std::vector<Zq> shifted;
      shifted.reserve(prev.precT());
      for (const Zq& x : prev.coeffs()) shifted.push_back(x.times_p_power(v).reduced(cmp));
      if (agree(lhs, Series(cmp, std::move(shifted))))
        return LubinLog{LogSeries::from_scaled(cur, n * v, effPrec), n};
    }
    prev = cur;
    iter = compose(P, iter);
    scale *= u_inv;
  }
}

// ---------------------------------------------------------- intertwiners

unsigned intertwiner_precision_loss(const StableNoninvertible& P) {
  const unsigned m = P.P.precT();
  return m < 2 ? 0 : P.lambda.valuation() * (m - 2);
}

namespace detail {

Series solve_intertwiner(const Series& F, const Series& G, const Zq& c, ErrorKind obstruction) {
  const Ring ring = common_ring(F.ring(), G.ring());
  const unsigned M = std::min(F.precT(), G.precT());
  const unsigned W = ring->precN();
  if (M < 2) fail(ErrorKind::InvalidArgument, "truncation must keep the linear term");
  const Series f = F.reduced(ring).truncated(M);
  const Series g = G.reduced(ring).truncated(M);
  if (!f[0].is_zero() || !g[0].is_zero())
    fail(ErrorKind::NonzeroConstantTerm, "both systems must fix the origin");
  const Zq lambda = g[1];
  if (f[1] != lambda)
    fail(obstruction, "degree 1: F'(0) = " + f[1].to_string() + " differs from G'(0) = " +
                          lambda.to_string());
  const unsigned v = lambda.valuation();
  if (v == 0 || v >= W) fail(ErrorKind::NotStable, "derivative must be a nonzero non-unit");
  const unsigned loss = v * (M - 2);
  if (loss >= W)
    fail(ErrorKind::PrecisionExhausted,
         "solver loses " + std::to_string(loss) + " digits but only " + std::to_string(W) +
             " are available");
  const Zq u = lambda.divide_by_p_power(v);

  std::vector<Zq> h(M, Zq::zero(ring));
  h[1] = into_ring(c, ring);
  Zq lambda_pow = lambda;  // lambda^(n-1)
  const Zq one = Zq::one(ring);
  // Degree n: (lambda - lambda^n) h_n = [h_<n o G]_n - [F o h_<n]_n.
  for (unsigned n = 2; n < M; ++n) {
    const Series partial(ring, std::vector<Zq>(h.begin(), h.begin() + n + 1));
    const Zq known = compose(partial, g.truncated(n + 1))[n] - compose(f.truncated(n + 1), partial)[n];
    if (known.valuation() < v)
      fail(obstruction, "degree " + std::to_string(n) + ": obstruction " + known.to_string() +
                            " is not divisible by lambda");
    const Zq denom = u * (one - lambda_pow);
    h[n] = known.divide_by_p_power(v) * denom.inverse();
    lambda_pow *= lambda;
  }
  return Series(ring, std::move(h)).reduced(ring->with_precision(W - loss));
}

}  // namespace detail

Series commutant(const StableNoninvertible& P, const Zq& c) {
  return detail::solve_intertwiner(P.P, P.P, c, ErrorKind::NoCommutant);
}

// ------------------------------------------------------------ fixed points

FixedPointNormalization normalize_fixed_point(const Series& Q) {
  const Ring& ring = Q.ring();
  const unsigned N = ring->precN();
  const unsigned M = Q.precT();
  if (M < 2) fail(ErrorKind::InvalidArgument, "need precT >= 2");
  const Series g = Q - Series::identity(ring, M);

  if (Q[0].is_zero()) {
    NewtonPolygon poly;
    if (!g.is_zero()) poly = newton_polygon(g);
    return FixedPointNormalization{Zq::zero(ring), Q, poly};
  }

  NewtonPolygon poly = newton_polygon(g);
  if (poly.segments.empty() || poly.segments.front().length != 1 ||
      !(poly.segments.front().slope < Rational(0)))
    fail(ErrorKind::NoInteriorFixedPoint,
         "Newton polygon of Q(T) - T does not start with a length-1 segment of negative slope");
  const unsigned v0 = poly.vertices[0].second;
  const unsigned v1 = poly.vertices[1].second;
  const unsigned lam = v0 - v1;  // valuation of the fixed point

  std::vector<Zq> dcoeffs;
  for (unsigned k = 1; k < M; ++k) dcoeffs.push_back(g[k] * Zq(ring, static_cast<long>(k)));
  const Series dg(ring, std::move(dcoeffs));

  // Newton from 0: in the coordinate T = p^lam U the equation becomes a unit
  // linear term plus higher-valuation terms, so the iteration converges.
  Zq a = Zq::zero(ring);
  bool settled = false;
  for (unsigned it = 0; it < 4 * N + 8; ++it) {
    const Zq ga = g.evaluate_polynomial(a);
    const Zq da = dg.evaluate_polynomial(a);
    if (da.valuation() != v1 || ga.valuation() < v1)
      fail(ErrorKind::NoInteriorFixedPoint, "Hensel iteration left the simple-root basin");
    const Zq step = ga.divide_by_p_power(v1) * da.divide_by_p_power(v1).inverse();
    if (step.is_zero()) {
      settled = true;
      break;
    }
    a -= step;
  }
  if (!settled) fail(ErrorKind::PrecisionExhausted, "Hensel iteration did not settle");

  const unsigned long tail_bound = static_cast<unsigned long>(M) * lam;
  const unsigned reliable = static_cast<unsigned>(std::min<unsigned long>(N, tail_bound));
  if (reliable <= v1) fail(ErrorKind::PrecisionExhausted, "no reliable digits of the fixed point");
  const unsigned n_out = reliable - v1;
  const Ring out = ring->with_precision(n_out);

  // Q(T + a) by Horner; multiplying by (T + a) never feeds high degrees down.
  std::vector<Zq> acc(M, Zq::zero(ring));
  for (unsigned k = M; k-- > 0;) {
    std::vector<Zq> next(M, Zq::zero(ring));
    for (unsigned j = 0; j < M; ++j) {
      next[j] = acc[j] * a;
      if (j > 0) next[j] += acc[j - 1];
    }
    next[0] += Q[k];
    acc = std::move(next);
  }
  acc[0] -= a;
  // A tail coefficient q_k (k >= M) reaches T^j with valuation >= (M - j) lam.
  const unsigned drop = (n_out + lam - 1) / lam;
  if (drop > M) fail(ErrorKind::PrecisionExhausted, "shifted series has no reliable coefficients");
  const unsigned m_out = std::min(M, M - drop + 1);
  Series shifted = Series(ring, std::move(acc)).truncated(m_out).reduced(out);
  return FixedPointNormalization{a.reduced(out), std::move(shifted), std::move(poly)};
}

// -------------------------------------------------------------- seeds

bool check_phi_iterate_seed(const Series& P, unsigned long d) {
  if (d == 0) return false;
  for (unsigned long t = d; t > 1; t /= P.ring()->p())
    if (t % P.ring()->p() != 0) return false;
  if (d >= P.precT()) return false;
  if (!P[0].is_zero()) return false;
  const Series r = reduce_mod_p(P);
  for (unsigned k = 0; k < r.precT(); ++k) {
    const Zq expected(r.ring(), k == d ? 1L : 0L);
    if (r[k] != expected) return false;
  }
  return true;
}

// ------------------------------------------------------------ lift datum

bool LiftDatumReport::all_ok() const {
  if (!pStable) return false;
  for (const auto& [label, m] : members)
    if (!m.regular || !m.commutesWithP) return false;
  for (const auto& [key, t] : table)
    if (!t.respected) return false;
  return true;
}

LiftDatumReport verify_lift_datum(const LiftDatum& datum) {
  LiftDatumReport report;
  try {
    StableNoninvertible::make(datum.P);
    report.pStable = true;
  } catch (const Error&) {
    report.pStable = false;
  }
  const Series& P = datum.P;
  for (const auto& [label, F] : datum.members) {
    LiftMemberReport m;
    m.eta = F.precT() > 1 ? F[1] : Zq::zero(F.ring());
    const bool origin = F.precT() > 0 && F[0].is_zero();
    m.regular = origin && F.precT() > 1 && F[1].is_unit();
    if (origin && P.precT() > 0 && P[0].is_zero()) {
      m.firstFailingDegree = first_difference(compose(F, P), compose(P, F));
      m.commutesWithP = !m.firstFailingDegree;
    } else {
      m.firstFailingDegree = 0;
    }
    report.members.emplace(label, std::move(m));
  }
  for (const auto& [key, target] : datum.table) {
    LiftTableReport t;
    const auto g = datum.members.find(key.first);
    const auto h = datum.members.find(key.second);
    const auto k = datum.members.find(target);
    if (g == datum.members.end() || h == datum.members.end() || k == datum.members.end()) {
      t.detail = "unknown label";
    } else {
      try {
        t.firstFailingDegree = first_difference(compose(g->second, h->second), k->second);
        t.respected = !t.firstFailingDegree;
      } catch (const Error& e) {
        t.detail = e.what();
      }
    }
    report.table.emplace(key, std::move(t));
  }
  return report;
}

// ------------------------------------------------------- root valuations

std::vector<SlopeMultiplicity> root_valuation_profile(const StableNoninvertible& sys, unsigned n) {
  if (n == 0) return {};
  const unsigned M = sys.P.precT();
  unsigned long top = 1;
  for (unsigned i = 0; i < n; ++i) {
    top *= sys.degree;
    if (top >= M)
      fail(ErrorKind::TruncationTooSmall,
           "iterate degree " + std::to_string(sys.degree) + "^" + std::to_string(n) +
               " does not fit below precT = " + std::to_string(M));
  }
  const Series quotient = iterate(sys.P, n).shift_down().truncated(static_cast<unsigned>(top));
  const NewtonPolygon poly = newton_polygon(quotient);
  std::vector<SlopeMultiplicity> out;
  for (const auto& seg : poly.segments)
    if (seg.slope < Rational(0)) out.push_back({seg.slope, seg.length});
  return out;
}

}  // namespace padic
