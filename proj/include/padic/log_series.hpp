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

#ifndef PADIC_LOG_SERIES_HPP
#define PADIC_LOG_SERIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "padic/series.hpp"

namespace padic {

// unit * p^(-denomExp).  Canonical form: either denomExp == 0, or unit is a
// p-adic unit; unit is reduced mod p^(effPrec + denomExp).
struct LogCoeff {
  unsigned denomExp = 0;
  Zq unit;
};

// Series with bounded p-power denominators.  Every coefficient is known
// modulo p^effPrec in absolute terms.
class LogSeries {
 public:
  LogSeries() = default;
  // `ring` fixes p, f and the modulus; precision is recomputed.
  LogSeries(const Ring& ring, unsigned effPrec, std::vector<LogCoeff> coeffs);

  // Coefficient k is numerators[k] / p^scale.  Needs precN(numerators) >=
  // scale + effPrec.
  static LogSeries from_scaled(const Series& numerators, unsigned scale, unsigned effPrec);

  unsigned precT() const noexcept { return static_cast<unsigned>(c_.size()); }
  unsigned effPrec() const noexcept { return effPrec_; }
  unsigned max_denom_exp() const noexcept { return maxDenom_; }
  // Ring of the stored units: precision effPrec + max_denom_exp().
  const Ring& ring() const noexcept { return ring_; }
  const LogCoeff& operator[](unsigned k) const { return c_.at(k); }
  const std::vector<LogCoeff>& coeffs() const noexcept { return c_; }

  // p^max_denom_exp() * L as an integral series, known mod
  // p^(effPrec + max_denom_exp()).
  Series scaled_numerators() const;

  bool operator==(const LogSeries& o) const;
  std::string to_string() const;

 private:
  Ring ring_;
  unsigned effPrec_ = 0;
  unsigned maxDenom_ = 0;
  std::vector<LogCoeff> c_;
};

// First degree where a and b differ modulo p^min(effPrec).
std::optional<unsigned> first_difference(const LogSeries& a, const LogSeries& b);

// First degree where L(g(T)) - c L(T) is nonzero modulo p^effPrec(L).
// Throws PrecisionExhausted when g or c carry fewer than
// effPrec + max_denom_exp() digits.
std::optional<unsigned> linearization_defect(const LogSeries& L, const Series& g, const Zq& c);

}  // namespace padic

#endif  // PADIC_LOG_SERIES_HPP
