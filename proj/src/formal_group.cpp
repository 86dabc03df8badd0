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

#include "padic/formal_group.hpp"

#include <algorithm>

namespace padic {

namespace {

Zq into_ring(const Zq& c, const Ring& ring) {
  if (same_ring(c.ring(), ring)) return c;
  if (!c.ring()->same_field(*ring)) fail(ErrorKind::SpecMismatch, "element from a different ring");
  return Zq(ring, c.coords());
}

// Solves pi c - pi^n phi_q(c) = known for one unknown coefficient.
class BlockSolver {
 public:
  BlockSolver(const Zq& pi, unsigned base_degree, bool direct)
      : pi_(pi), v_(pi.valuation()), b_(base_degree), direct_(direct) {
    u_ = pi.divide_by_p_power(v_);
    u_inv_ = u_.inverse();
    cap_ = 2 * pi.ring()->precN();
  }

  Zq solve(const Zq& known, unsigned n, const Zq& pi_pow_nm1) const {
    if (known.valuation() < v_)
      fail(ErrorKind::DivisibilityFailure,
           "degree " + std::to_string(n) + ": known term " + known.to_string() +
               " is not divisible by pi");
    const Ring& ring = pi_.ring();
    if (direct_) {
      const Zq denom = u_ * (Zq::one(ring) - pi_pow_nm1);
      return known.divide_by_p_power(v_) * denom.inverse();
    }
    const Zq pi_n = pi_pow_nm1 * pi_;
    Zq c = Zq::zero(ring);
    for (unsigned it = 0; it < cap_; ++it) {
      Zq next = (known + pi_n * c.frobenius(b_)).divide_by_p_power(v_) * u_inv_;
      if (next == c) return c;
      c = std::move(next);
    }
    fail(ErrorKind::PrecisionExhausted,
         "contraction at degree " + std::to_string(n) + " did not settle within " +
             std::to_string(cap_) + " iterations");
  }

 private:
  Zq pi_;
  unsigned v_;
  unsigned b_;
  bool direct_;
  Zq u_;
  Zq u_inv_;
  unsigned cap_ = 0;
};

unsigned stamped_precision(unsigned working, unsigned precD, unsigned v) {
  const unsigned long loss = static_cast<unsigned long>(precD - 1) * v;
  if (loss >= working)
    fail(ErrorKind::PrecisionExhausted,
         "degree " + std::to_string(precD - 1) + " needs " + std::to_string(loss) +
             " guard digits, ring carries " + std::to_string(working));
  return working - static_cast<unsigned>(loss);
}

bool use_direct(const FrobeniusSeries& frob, SolverPath path) {
  const Series& f = frob.series();
  const bool fixed = f.frobenius(frob.base_degree()) == f;
  if (path == SolverPath::Direct && !fixed)
    fail(ErrorKind::InvalidArgument, "direct solver needs f^phi_q = f");
  if (path == SolverPath::Auto) return fixed;
  return path == SolverPath::Direct;
}

// Residual valuation and first failing index of a bivariate difference.
AxiomResult residual_of(const BiSeries& diff) {
  AxiomResult r;
  r.residualValuation = diff.precN();
  for (unsigned n = 0; n < diff.precD(); ++n)
    for (unsigned i = 0; i <= n; ++i) {
      const Zq& x = diff.at(i, n - i);
      if (x.is_zero()) continue;
      r.residualValuation = std::min(r.residualValuation, x.valuation());
      if (r.holds) {
        r.holds = false;
        r.failingIndex = {i, n - i};
      }
    }
  return r;
}

// Dense trivariate series truncated by total degree.
class TriSeries {
 public:
  TriSeries(const Ring& ring, unsigned m) : m_(m), c_(std::size_t(m) * m * m, Zq::zero(ring)) {}
  Zq& at(unsigned i, unsigned j, unsigned k) { return c_[(std::size_t(i) * m_ + j) * m_ + k]; }
  const Zq& at(unsigned i, unsigned j, unsigned k) const {
    return c_[(std::size_t(i) * m_ + j) * m_ + k];
  }
  unsigned precD() const { return m_; }

 private:
  unsigned m_;
  std::vector<Zq> c_;
};

// S(S(X,Y), Z) when left, else S(X, S(Y,Z)).
TriSeries associate(const BiSeries& S, bool left) {
  const unsigned m = S.precD();
  const Ring& r = S.ring();
  TriSeries out(r, m);
  BiSeries one(r, m);
  if (m > 0) one.set(0, 0, Zq::one(r));
  std::vector<BiSeries> pw{one};
  for (unsigned e = 1; e < m; ++e) pw.push_back(pw.back() * S);
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = 0; i + j < m; ++j) {
      const Zq& sij = S.at(i, j);
      if (sij.is_zero()) continue;
      // left: S_ij (S(X,Y))^i Z^j; right: S_ij X^i (S(Y,Z))^j.
      const BiSeries& inner = pw[left ? i : j];
      const unsigned outer = left ? j : i;
      for (unsigned a = 0; a + outer < m; ++a)
        for (unsigned b = 0; a + b + outer < m; ++b) {
          const Zq& x = inner.at(a, b);
          if (x.is_zero()) continue;
          Zq& slot = left ? out.at(a, b, outer) : out.at(outer, a, b);
          slot += sij * x;
        }
    }
  return out;
}

}  // namespace

// ------------------------------------------------------- FrobeniusSeries

FrobeniusSeries FrobeniusSeries::make(Series f, unsigned twist) {
  const Ring& ring = f.ring();
  if (twist == 0 || ring->f() % twist != 0)
    fail(ErrorKind::InvalidArgument, "twist " + std::to_string(twist) + " must divide f = " +
                                         std::to_string(ring->f()));
  if (f.precT() < 2) fail(ErrorKind::InvalidArgument, "f needs its linear coefficient");
  if (!f[0].is_zero()) fail(ErrorKind::NonzeroConstantTerm, "f(0) = " + f[0].to_string());
  FrobeniusSeries out;
  out.pi_ = f[1];
  const unsigned v = out.pi_.valuation();
  if (v == 0 || v >= ring->precN())
    fail(ErrorKind::InvalidArgument,
         "f'(0) = " + out.pi_.to_string() + " must be a nonzero element of the maximal ideal");
  out.twist_ = twist;
  unsigned long q = 1;
  for (unsigned i = 0; i < ring->f() / twist; ++i) {
    q *= ring->p();
    if (q >= f.precT())
      fail(ErrorKind::InvalidArgument,
           "q exceeds the truncation precT = " + std::to_string(f.precT()));
  }
  out.q_ = q;
  const Series r = reduce_mod_p(f);
  for (unsigned k = 0; k < r.precT(); ++k)
    if (r[k] != Zq(r.ring(), k == q ? 1L : 0L))
      fail(ErrorKind::InvalidArgument,
           "f is not T^" + std::to_string(q) + " mod p (degree " + std::to_string(k) + ")");
  out.f_ = std::move(f);
  return out;
}

FrobeniusSeries FrobeniusSeries::reduced(const Ring& lower) const {
  FrobeniusSeries out = *this;
  out.f_ = f_.reduced(lower);
  out.pi_ = out.f_[1];
  return out;
}

// ------------------------------------------------------------ construction

FormalGroup build_formal_group(const FrobeniusSeries& frob, unsigned precD, SolverPath path) {
  const Series& f = frob.series();
  const Ring& ring = f.ring();
  if (precD < 2) fail(ErrorKind::InvalidArgument, "precD must be at least 2");
  if (f.precT() < precD)
    fail(ErrorKind::InvalidArgument, "f is known only to T^" + std::to_string(f.precT()) +
                                         ", law requested to total degree " +
                                         std::to_string(precD));
  const unsigned v = frob.pi().valuation();
  const unsigned stamped = stamped_precision(ring->precN(), precD, v);
  const bool direct = use_direct(frob, path);
  const BlockSolver solver(frob.pi(), frob.base_degree(), direct);

  const Series fM = f.truncated(precD);
  BiSeries S = BiSeries::x_plus_y(ring, precD);
  Zq pi_pow = frob.pi();  // pi^(n-1)
  for (unsigned n = 2; n < precD; ++n) {
    const BiSeries Sn = S.truncated(n + 1);
    const Series fn = fM.truncated(n + 1);
    const BiSeries lhs = bi_eval_separate(Sn.frobenius(frob.base_degree()), fn, fn);
    const BiSeries rhs = compose(fn, Sn);
    for (unsigned i = 0; i <= n; ++i) {
      const Zq known = lhs.at(i, n - i) - rhs.at(i, n - i);
      S.set(i, n - i, solver.solve(known, n, pi_pow));
    }
    pi_pow *= frob.pi();
  }

  FormalGroup G;
  G.frob_ = frob;
  G.path_ = path;
  G.law_ = S.reduced(ring->with_precision(stamped));
  return G;
}

Series FormalGroup::endomorphism(const Zq& a) const {
  const Ring& ring = frob_.series().ring();
  const unsigned b = frob_.base_degree();
  if (a.frobenius(b) != a)
    fail(ErrorKind::NotBaseFixed, a.to_string() + " is not fixed by phi_q");
  const Zq aw = into_ring(a, ring);
  const std::string key = aw.to_string();
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    const auto it = cache_->entries.find(key);
    if (it != cache_->entries.end()) return it->second.second;
  }

  const unsigned M = precD();
  const BlockSolver solver(frob_.pi(), b, use_direct(frob_, path_));
  const Series fM = frob_.series().truncated(M);
  std::vector<Zq> h(M, Zq::zero(ring));
  h[1] = aw;
  Zq pi_pow = frob_.pi();
  for (unsigned n = 2; n < M; ++n) {
    const Series partial(ring, std::vector<Zq>(h.begin(), h.begin() + n + 1));
    const Series fn = fM.truncated(n + 1);
    const Zq known = compose(partial.frobenius(b), fn)[n] - compose(fn, partial)[n];
    h[n] = solver.solve(known, n, pi_pow);
    pi_pow *= frob_.pi();
  }
  Series result = Series(ring, std::move(h)).reduced(law_.ring());

  if (const auto diff = first_difference(compose(result, law_), bi_eval_separate(law_, result, result)))
    fail(ErrorKind::PrecisionExhausted,
         "[" + key + "] does not respect the law at degree " + std::to_string(diff->degree) +
             "; increase the working precision");

  std::lock_guard<std::mutex> lock(cache_->mu);
  return cache_->entries.emplace(key, std::make_pair(aw, std::move(result))).first->second.second;
}

std::map<std::string, Series> FormalGroup::cached_endomorphisms() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  std::map<std::string, Series> out;
  for (const auto& [key, entry] : cache_->entries)
    out.emplace(entry.first.reduced(law_.ring()).to_string(), entry.second);
  return out;
}

// ------------------------------------------------------------------ axioms

AxiomReport verify_group_axioms(const BiSeries& S) {
  AxiomReport rep;
  const Ring& r = S.ring();
  const unsigned m = S.precD();
  rep.commutative = residual_of(S - S.swapped());

  BiSeries unit_res(r, m);
  for (unsigned k = 0; k < m; ++k) {
    const Zq delta(r, k == 1 ? 1L : 0L);
    unit_res.set(k, 0, S.at(k, 0) - delta);
    unit_res.set(0, k, S.at(0, k) - delta);
  }
  rep.unital = residual_of(unit_res);

  AxiomResult& assoc = rep.associative;
  assoc.residualValuation = S.precN();
  if (m > 0 && !S.at(0, 0).is_zero()) {
    assoc.holds = false;
    assoc.residualValuation = 0;
    assoc.failingIndex = {0, 0, 0};
    return rep;
  }
  const TriSeries lhs = associate(S, true);
  const TriSeries rhs = associate(S, false);
  for (unsigned n = 0; n < m; ++n)
    for (unsigned i = n + 1; i-- > 0;)
      for (unsigned j = n - i + 1; j-- > 0;) {
        const unsigned k = n - i - j;
        const Zq d = lhs.at(i, j, k) - rhs.at(i, j, k);
        if (d.is_zero()) continue;
        assoc.residualValuation = std::min(assoc.residualValuation, d.valuation());
        if (assoc.holds) {
          assoc.holds = false;
          assoc.failingIndex = {i, j, k};
        }
      }
  return rep;
}

AxiomReport verify_group_axioms(const FormalGroup& G) { return verify_group_axioms(G.law()); }

AxiomResult functional_equation_defect(const FormalGroup& G) {
  const BiSeries& S = G.law();
  const Series f = G.frob().series().reduced(S.ring()).truncated(S.precD());
  const BiSeries lhs = compose(f, S);
  const BiSeries rhs = bi_eval_separate(S.frobenius(G.frob().base_degree()), f, f);
  return residual_of(lhs - rhs);
}

}  // namespace padic
