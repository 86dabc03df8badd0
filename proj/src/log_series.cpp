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

#include "padic/log_series.hpp"

#include <algorithm>
#include <sstream>

namespace padic {

namespace {

mpz_class p_power(unsigned long p, unsigned k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, k);
  return r;
}

}  // namespace

LogSeries::LogSeries(const Ring& ring, unsigned effPrec, std::vector<LogCoeff> coeffs)
    : effPrec_(effPrec) {
  if (effPrec < 1) fail(ErrorKind::InvalidArgument, "effective precision must be >= 1");
  const unsigned long p = ring->p();
  std::vector<std::pair<unsigned, std::vector<mpz_class>>> canon;
  canon.reserve(coeffs.size());
  for (auto& lc : coeffs) {
    unsigned e = lc.denomExp;
    Zq u = lc.unit;
    if (!u.ring()->same_field(*ring))
      fail(ErrorKind::SpecMismatch, "log coefficient from a different ring");
    if (e > 0) {
      const unsigned shift = std::min(u.valuation(), e);
      u = u.divide_by_p_power(shift);
      e -= shift;
    }
    if (u.ring()->precN() < effPrec + e)
      fail(ErrorKind::PrecisionExhausted,
           "log coefficient carries " + std::to_string(u.ring()->precN()) + " digits, needs " +
               std::to_string(effPrec + e));
    const mpz_class m = p_power(p, effPrec + e);
    std::vector<mpz_class> coords = u.coords();
    for (auto& x : coords) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    maxDenom_ = std::max(maxDenom_, e);
    canon.emplace_back(e, std::move(coords));
  }
  ring_ = ring->with_precision(effPrec + maxDenom_);
  c_.reserve(canon.size());
  for (auto& [e, coords] : canon) c_.push_back({e, Zq(ring_, std::move(coords))});
}

LogSeries LogSeries::from_scaled(const Series& numerators, unsigned scale, unsigned effPrec) {
  if (numerators.precN() < scale + effPrec)
    fail(ErrorKind::PrecisionExhausted,
         "numerators carry " + std::to_string(numerators.precN()) + " digits, need " +
             std::to_string(scale + effPrec));
  std::vector<LogCoeff> coeffs;
  coeffs.reserve(numerators.precT());
  for (const Zq& x : numerators.coeffs()) {
    const unsigned v = x.valuation();
    if (v >= scale)
      coeffs.push_back({0, x.divide_by_p_power(scale)});
    else
      coeffs.push_back({scale - v, x.divide_by_p_power(v)});
  }
  return LogSeries(numerators.ring(), effPrec, std::move(coeffs));
}

Series LogSeries::scaled_numerators() const {
  std::vector<Zq> c;
  c.reserve(c_.size());
  for (const auto& lc : c_) c.push_back(lc.unit.times_p_power(maxDenom_ - lc.denomExp));
  return Series(ring_, std::move(c));
}

bool LogSeries::operator==(const LogSeries& o) const {
  if (effPrec_ != o.effPrec_ || c_.size() != o.c_.size() || !same_ring(ring_, o.ring_)) return false;
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k].denomExp != o.c_[k].denomExp || c_[k].unit != o.c_[k].unit) return false;
  return true;
}

std::string LogSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  const unsigned long p = ring_->p();
  for (unsigned k = 0; k < precT(); ++k) {
    const auto& lc = c_[k];
    if (lc.unit.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << lc.unit.to_string();
    if (lc.denomExp) os << "/" << p << "^" << lc.denomExp;
    if (k) os << "*T" << (k > 1 ? "^" + std::to_string(k) : "");
  }
  if (first) os << "0";
  os << " + O(T^" << precT() << ") [mod " << p << "^" << effPrec_ << "]";
  return os.str();
}

std::optional<unsigned> first_difference(const LogSeries& a, const LogSeries& b) {
  if (!a.ring()->same_field(*b.ring()))
    fail(ErrorKind::SpecMismatch, "log series over different rings");
  const unsigned e = std::min(a.effPrec(), b.effPrec());
  const unsigned m = std::min(a.precT(), b.precT());
  const unsigned long p = a.ring()->p();
  for (unsigned k = 0; k < m; ++k) {
    const auto& x = a[k];
    const auto& y = b[k];
    const unsigned E = std::max(x.denomExp, y.denomExp);
    const mpz_class mod = p_power(p, e + E);
    const mpz_class sx = p_power(p, E - x.denomExp);
    const mpz_class sy = p_power(p, E - y.denomExp);
    for (std::size_t i = 0; i < x.unit.coords().size(); ++i) {
      mpz_class d = x.unit.coords()[i] * sx - y.unit.coords()[i] * sy;
      if (!mpz_divisible_p(d.get_mpz_t(), mod.get_mpz_t())) return k;
    }
  }
  return std::nullopt;
}

std::optional<unsigned> linearization_defect(const LogSeries& L, const Series& g, const Zq& c) {
  const Series lint = L.scaled_numerators();
  const unsigned need = lint.precN();
  if (g.precN() < need || c.ring()->precN() < need)
    fail(ErrorKind::PrecisionExhausted,
         "linearization check needs " + std::to_string(need) + " digits, have " +
             std::to_string(std::min(g.precN(), c.ring()->precN())));
  const Series lhs = compose(lint, g);
  const Series rhs = lint.scaled(c.reduced(lint.ring()));
  return first_difference(lhs, rhs);
}

}  // namespace padic
