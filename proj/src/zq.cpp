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

#include "padic/zq.hpp"

#include <algorithm>
#include <sstream>

namespace padic {

namespace {

// ---- polynomials over F_p, little-endian, used for modulus selection ----

using Fp = unsigned long;
using FpPoly = std::vector<Fp>;

Fp mulmod(Fp a, Fp b, Fp p) {
  return static_cast<Fp>((static_cast<unsigned __int128>(a) * b) % p);
}

void trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Fp inv_mod(Fp a, Fp p) {
  mpz_class r, aa(a), pp(p);
  mpz_invert(r.get_mpz_t(), aa.get_mpz_t(), pp.get_mpz_t());
  return r.get_ui();
}

FpPoly poly_mod(FpPoly a, const FpPoly& m, Fp p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const Fp lead_inv = inv_mod(m.back(), p);
  while (a.size() >= m.size()) {
    const Fp t = mulmod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = (a[shift + i] + p - mulmod(t, m[i], p)) % p;
    }
    trim(a);
  }
  return a;
}

FpPoly poly_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, Fp p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  return poly_mod(std::move(r), m, p);
}

FpPoly poly_powmod(FpPoly base, mpz_class e, const FpPoly& m, Fp p) {
  FpPoly r{1};
  base = poly_mod(std::move(base), m, p);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return poly_mod(std::move(r), m, p);
}

FpPoly poly_gcd(FpPoly a, FpPoly b, Fp p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    FpPoly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<unsigned long> prime_factors(mpz_class n) {
  std::vector<unsigned long> out;
  for (unsigned long d = 2; mpz_class(d) * d <= n; ++d) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      out.push_back(d);
      while (mpz_divisible_ui_p(n.get_mpz_t(), d)) n /= d;
    }
  }
  if (n > 1) {
    if (!n.fits_ulong_p()) fail(ErrorKind::InvalidArgument, "q - 1 too large to factor");
    out.push_back(n.get_ui());
  }
  return out;
}

// Rabin's test.
bool irreducible_mod_p(const FpPoly& g, Fp p) {
  const unsigned f = static_cast<unsigned>(g.size() - 1);
  if (f == 1) return true;
  const FpPoly x{0, 1};
  auto x_pow_p_k = [&](unsigned k) {
    mpz_class e;
    mpz_ui_pow_ui(e.get_mpz_t(), p, k);
    return poly_powmod(x, e, g, p);
  };
  FpPoly full = x_pow_p_k(f);
  full.resize(std::max<std::size_t>(full.size(), 2), 0);
  full[1] = (full[1] + p - 1) % p;
  trim(full);
  if (!full.empty()) return false;
  for (unsigned long r : prime_factors(mpz_class(f))) {
    FpPoly h = x_pow_p_k(f / static_cast<unsigned>(r));
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    FpPoly d = poly_gcd(g, h, p);
    if (d.size() != 1) return false;
  }
  return true;
}

FpPoly digits_base_p(unsigned long index, Fp p, unsigned len) {
  FpPoly d(len, 0);
  for (unsigned i = 0; i < len; ++i) {
    d[i] = index % p;
    index /= p;
  }
  return d;
}

FpPoly default_modulus(Fp p, unsigned f) {
  if (f == 1) return {0, 1};
  for (unsigned long idx = 0;; ++idx) {
    FpPoly g = digits_base_p(idx, p, f);
    g.push_back(1);
    if (g[0] != 0 && irreducible_mod_p(g, p)) return g;
  }
}

void reduce_poly(std::vector<mpz_class>& poly, const RingSpec& spec) {
  const unsigned f = spec.f();
  const auto& m = spec.modulus();
  for (std::size_t k = poly.size(); k-- > f;) {
    if (poly[k] == 0) continue;
    const mpz_class t = poly[k];
    for (unsigned i = 0; i < f; ++i) poly[k - f + i] -= t * m[i];
    poly[k] = 0;
  }
  poly.resize(f);
  for (auto& c : poly) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), spec.pN().get_mpz_t());
}

unsigned p_valuation(const mpz_class& v, unsigned long p, unsigned cap) {
  if (v == 0) return cap;
  mpz_class t = v;
  unsigned k = 0;
  while (k < cap && mpz_divisible_ui_p(t.get_mpz_t(), p)) {
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), p);
    ++k;
  }
  return k;
}

}  // namespace

// ---------------------------------------------------------------- RingSpec

Ring RingSpec::make(unsigned long p, unsigned f, unsigned precN,
                    std::vector<mpz_class> modulus) {
  if (p < 2 || mpz_probab_prime_p(mpz_class(p).get_mpz_t(), 30) == 0)
    fail(ErrorKind::InvalidArgument, "p = " + std::to_string(p) + " is not prime");
  if (p > 0xffffffffUL) fail(ErrorKind::InvalidArgument, "p must fit in 32 bits");
  if (f < 1) fail(ErrorKind::InvalidArgument, "extension degree f must be >= 1");
  if (precN < 1) fail(ErrorKind::InvalidArgument, "precision N must be >= 1");

  auto spec = std::shared_ptr<RingSpec>(new RingSpec());
  spec->p_ = p;
  spec->f_ = f;
  spec->precN_ = precN;
  mpz_ui_pow_ui(spec->pN_.get_mpz_t(), p, precN);
  mpz_ui_pow_ui(spec->q_.get_mpz_t(), p, f);

  FpPoly mod_p;
  if (modulus.empty()) {
    mod_p = default_modulus(p, f);
    for (Fp c : mod_p) modulus.emplace_back(c);
  } else {
    if (modulus.size() != f + 1)
      fail(ErrorKind::InvalidArgument, "modulus must have f + 1 coefficients");
    mpz_class lead = modulus.back();
    mpz_fdiv_r(lead.get_mpz_t(), lead.get_mpz_t(), spec->pN_.get_mpz_t());
    if (lead != 1) fail(ErrorKind::InvalidArgument, "modulus must be monic");
    for (const auto& c : modulus) {
      mpz_class r;
      mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), p);
      mod_p.push_back(r.get_ui());
    }
    if (!irreducible_mod_p(mod_p, p))
      fail(ErrorKind::InvalidArgument, "modulus is not irreducible mod p");
  }
  for (auto& c : modulus) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), spec->pN_.get_mpz_t());
  spec->modulus_ = std::move(modulus);

  // Frobenius: phi(x) is the root of the modulus congruent to x^p, found by
  // Newton iteration; the derivative is a unit because the modulus is
  // separable mod p.
  spec->frob_.assign(f, std::vector<mpz_class>(f, 0));
  spec->frob_[0][0] = 1;
  if (f > 1) {
    Ring r = spec;
    const Zq x = Zq::generator(r);
    auto eval = [&](const Zq& y, bool derivative) {
      Zq acc = Zq::zero(r);
      for (std::size_t i = spec->modulus_.size(); i-- > (derivative ? 1u : 0u);) {
        mpz_class coeff = spec->modulus_[i];
        if (derivative) coeff *= static_cast<unsigned long>(i);
        acc = acc * y + Zq(r, coeff);
      }
      return acc;
    };
    Zq y = x.pow(p);
    for (unsigned it = 0; it < 2 * precN + 8; ++it) {
      const Zq next = y - eval(y, false) * eval(y, true).inverse();
      if (next == y) break;
      y = next;
    }
    Zq power = Zq::one(r);
    for (unsigned i = 0; i < f; ++i) {
      spec->frob_[i] = power.coords();
      power *= y;
    }
  }
  return spec;
}

Ring RingSpec::with_precision(unsigned n) const {
  if (n == precN_) {
    auto copy = std::shared_ptr<RingSpec>(new RingSpec(*this));
    return copy;
  }
  if (n > precN_) return make(p_, f_, n, modulus_);
  if (n < 1) fail(ErrorKind::PrecisionExhausted, "precision dropped below 1 digit");
  auto spec = std::shared_ptr<RingSpec>(new RingSpec(*this));
  spec->precN_ = n;
  mpz_ui_pow_ui(spec->pN_.get_mpz_t(), p_, n);
  for (auto& c : spec->modulus_) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), spec->pN_.get_mpz_t());
  for (auto& col : spec->frob_)
    for (auto& c : col) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), spec->pN_.get_mpz_t());
  return spec;
}

bool RingSpec::same_field(const RingSpec& o) const {
  if (p_ != o.p_ || f_ != o.f_) return false;
  const mpz_class& m = precN_ <= o.precN_ ? pN_ : o.pN_;
  for (unsigned i = 0; i <= f_; ++i) {
    mpz_class d = modulus_[i] - o.modulus_[i];
    if (!mpz_divisible_p(d.get_mpz_t(), m.get_mpz_t())) return false;
  }
  return true;
}

bool RingSpec::operator==(const RingSpec& o) const {
  return precN_ == o.precN_ && p_ == o.p_ && f_ == o.f_ && modulus_ == o.modulus_;
}

std::string RingSpec::describe() const {
  std::ostringstream os;
  os << "Z_" << p_;
  if (f_ > 1) os << "^" << f_;
  os << " mod " << p_ << "^" << precN_;
  return os.str();
}

bool same_ring(const Ring& a, const Ring& b) {
  return a == b || (a && b && *a == *b);
}

Ring common_ring(const Ring& a, const Ring& b) {
  if (same_ring(a, b)) return a;
  if (!a || !b || !a->same_field(*b))
    fail(ErrorKind::SpecMismatch, "operands live in different coefficient rings");
  return a->precN() <= b->precN() ? a : b;
}

// ---------------------------------------------------------------------- Zq

Zq::Zq(Ring ring) : ring_(std::move(ring)), c_(ring_->f(), 0) {}

Zq::Zq(Ring ring, std::vector<mpz_class> coords)
    : ring_(std::move(ring)), c_(std::move(coords)) {
  if (c_.size() > ring_->f()) {
    reduce_poly(c_, *ring_);
  } else {
    c_.resize(ring_->f(), 0);
    reduce();
  }
}

Zq::Zq(Ring ring, const mpz_class& value) : ring_(std::move(ring)), c_(ring_->f(), 0) {
  c_[0] = value;
  reduce();
}

Zq Zq::generator(const Ring& ring) {
  std::vector<mpz_class> c(ring->f() + 1, 0);
  c[1] = 1;
  return Zq(ring, std::move(c));
}

void Zq::reduce() {
  for (auto& c : c_) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), ring_->pN().get_mpz_t());
}

bool Zq::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const mpz_class& c) { return c == 0; });
}

unsigned Zq::valuation() const {
  unsigned v = ring_->precN();
  for (const auto& c : c_) v = std::min(v, p_valuation(c, ring_->p(), v));
  return v;
}

Zq Zq::operator+(const Zq& o) const {
  Zq r = *this;
  r += o;
  return r;
}

Zq Zq::operator-(const Zq& o) const {
  Zq r = *this;
  r -= o;
  return r;
}

Zq Zq::operator*(const Zq& o) const {
  if (!same_ring(ring_, o.ring_))
    fail(ErrorKind::SpecMismatch, ring_->describe() + " vs " + o.ring_->describe());
  if (c_.size() == 1) {
    Zq r(ring_);
    mpz_mul(r.c_[0].get_mpz_t(), c_[0].get_mpz_t(), o.c_[0].get_mpz_t());
    mpz_fdiv_r(r.c_[0].get_mpz_t(), r.c_[0].get_mpz_t(), ring_->pN().get_mpz_t());
    return r;
  }
  std::vector<mpz_class> prod(2 * c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < c_.size(); ++j)
      mpz_addmul(prod[i + j].get_mpz_t(), c_[i].get_mpz_t(), o.c_[j].get_mpz_t());
  }
  reduce_poly(prod, *ring_);
  Zq r(ring_);
  r.c_ = std::move(prod);
  return r;
}

Zq Zq::operator-() const {
  Zq r(ring_);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != 0) r.c_[i] = ring_->pN() - c_[i];
  }
  return r;
}

Zq& Zq::operator+=(const Zq& o) {
  if (!same_ring(ring_, o.ring_))
    fail(ErrorKind::SpecMismatch, ring_->describe() + " vs " + o.ring_->describe());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    c_[i] += o.c_[i];
    if (c_[i] >= ring_->pN()) c_[i] -= ring_->pN();
  }
  return *this;
}

Zq& Zq::operator-=(const Zq& o) {
  if (!same_ring(ring_, o.ring_))
    fail(ErrorKind::SpecMismatch, ring_->describe() + " vs " + o.ring_->describe());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    c_[i] -= o.c_[i];
    if (c_[i] < 0) c_[i] += ring_->pN();
  }
  return *this;
}

Zq& Zq::operator*=(const Zq& o) {
  *this = *this * o;
  return *this;
}

bool Zq::operator==(const Zq& o) const {
  return same_ring(ring_, o.ring_) && c_ == o.c_;
}

Zq Zq::pow(const mpz_class& e) const {
  if (e < 0) return inverse().pow(mpz_class(-e));
  Zq result = one(ring_);
  Zq base = *this;
  mpz_class k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

Zq Zq::inverse() const {
  if (valuation() != 0) fail(ErrorKind::NonUnit, to_string() + " is not a unit");
  if (c_.size() == 1) {
    Zq r(ring_);
    mpz_invert(r.c_[0].get_mpz_t(), c_[0].get_mpz_t(), ring_->pN().get_mpz_t());
    return r;
  }
  // Inverse mod p from a^(q-2), then Newton y <- y(2 - ay).
  Zq y = pow(ring_->q() - 2);
  const Zq two(ring_, 2L);
  for (unsigned prec = 1; prec < ring_->precN(); prec *= 2) y = y * (two - *this * y);
  return y;
}

Zq Zq::divide_by_p_power(unsigned k) const {
  if (k == 0) return *this;
  if (k > ring_->precN() || valuation() < k)
    fail(ErrorKind::DivisibilityFailure,
         to_string() + " is not divisible by " + std::to_string(ring_->p()) + "^" +
             std::to_string(k));
  mpz_class pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), ring_->p(), k);
  Zq r(ring_);
  for (std::size_t i = 0; i < c_.size(); ++i)
    mpz_divexact(r.c_[i].get_mpz_t(), c_[i].get_mpz_t(), pk.get_mpz_t());
  return r;
}

Zq Zq::times_p_power(unsigned k) const {
  mpz_class pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), ring_->p(), k);
  std::vector<mpz_class> c = c_;
  for (auto& x : c) x *= pk;
  return Zq(ring_, std::move(c));
}

Zq Zq::frobenius(unsigned k) const {
  const unsigned f = ring_->f();
  if (f == 1) return *this;
  k %= f;
  Zq cur = *this;
  const auto& images = ring_->frobenius_images();
  for (unsigned step = 0; step < k; ++step) {
    std::vector<mpz_class> next(f, 0);
    for (unsigned i = 0; i < f; ++i) {
      if (cur.c_[i] == 0) continue;
      for (unsigned j = 0; j < f; ++j)
        mpz_addmul(next[j].get_mpz_t(), cur.c_[i].get_mpz_t(), images[i][j].get_mpz_t());
    }
    cur = Zq(ring_, std::move(next));
  }
  return cur;
}

std::vector<unsigned long> Zq::residue() const {
  std::vector<unsigned long> r;
  r.reserve(c_.size());
  for (const auto& c : c_) {
    mpz_class t;
    mpz_fdiv_r_ui(t.get_mpz_t(), c.get_mpz_t(), ring_->p());
    r.push_back(t.get_ui());
  }
  return r;
}

Zq Zq::reduced(const Ring& lower) const {
  if (same_ring(ring_, lower)) return *this;
  if (!lower->same_field(*ring_) || lower->precN() > ring_->precN())
    fail(ErrorKind::SpecMismatch, "cannot move " + ring_->describe() + " to " + lower->describe());
  return Zq(lower, c_);
}

Zq Zq::teichmuller(const Ring& ring, const std::vector<unsigned long>& r) {
  std::vector<mpz_class> c;
  for (unsigned long d : r) c.emplace_back(d);
  Zq x(ring, std::move(c));
  // x -> x^q is a contraction on the residue class; N + 1 steps suffice.
  for (unsigned it = 0; it <= ring->precN() + 1; ++it) {
    Zq next = x.pow(ring->q());
    if (next == x) break;
    x = std::move(next);
  }
  return x;
}

std::string Zq::to_string() const {
  if (c_.size() == 1) return c_[0].get_str();
  std::string s = "[";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ",";
    s += c_[i].get_str();
  }
  return s + "]";
}

// ----------------------------------------------------------- ZqAccumulator

ZqAccumulator::ZqAccumulator(const Ring& ring)
    : ring_(ring), acc_(2 * ring->f() - 1, 0) {}

void ZqAccumulator::clear() {
  for (auto& a : acc_) a = 0;
}

void ZqAccumulator::addmul(const Zq& a, const Zq& b) {
  const auto& x = a.coords();
  const auto& y = b.coords();
  if (x.size() == 1) {
    mpz_addmul(acc_[0].get_mpz_t(), x[0].get_mpz_t(), y[0].get_mpz_t());
    return;
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      mpz_addmul(acc_[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
  }
}

void ZqAccumulator::add(const Zq& a) {
  for (std::size_t i = 0; i < a.coords().size(); ++i) acc_[i] += a.coords()[i];
}

void ZqAccumulator::sub(const Zq& a) {
  for (std::size_t i = 0; i < a.coords().size(); ++i) acc_[i] -= a.coords()[i];
}

Zq ZqAccumulator::result() const { return Zq(ring_, acc_); }

std::vector<unsigned long> primitive_residue(const Ring& ring) {
  const Fp p = ring->p();
  const unsigned f = ring->f();
  FpPoly m;
  for (const auto& c : ring->modulus()) {
    mpz_class t;
    mpz_fdiv_r_ui(t.get_mpz_t(), c.get_mpz_t(), p);
    m.push_back(t.get_ui());
  }
  const mpz_class order = ring->q() - 1;
  const auto primes = prime_factors(order);
  for (unsigned long idx = 1;; ++idx) {
    FpPoly cand = digits_base_p(idx, p, f);
    bool ok = true;
    for (unsigned long l : primes) {
      FpPoly r = poly_powmod(cand, order / l, m, p);
      if (r.size() == 1 && r[0] == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return cand;
  }
}

}  // namespace padic
