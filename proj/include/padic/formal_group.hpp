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

// Lubin-Tate formal groups, classical and relative.  The relative case lives
// over O_E with E/F unramified of degree h (the twist); phi_q is the
// Frobenius of E over F, and the law satisfies S^phi_q o f = f o S.

#ifndef PADIC_FORMAL_GROUP_HPP
#define PADIC_FORMAL_GROUP_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "padic/series.hpp"

namespace padic {

class FrobeniusSeries {
 public:
  FrobeniusSeries() = default;

  // f = pi T + O(T^2) with 1 <= v(pi) < N and f = T^q mod p, where
  // q = p^(f_ring / twist).  twist = 1 is the classical case.
  static FrobeniusSeries make(Series f, unsigned twist = 1);

  const Series& series() const noexcept { return f_; }
  const Zq& pi() const noexcept { return pi_; }
  unsigned long q() const noexcept { return q_; }
  unsigned twist() const noexcept { return twist_; }
  // Number of absolute Frobenius steps making up phi_q.
  unsigned base_degree() const noexcept { return f_.ring()->f() / twist_; }

  FrobeniusSeries reduced(const Ring& lower) const;

 private:
  Series f_;
  Zq pi_;
  unsigned long q_ = 0;
  unsigned twist_ = 1;
};

enum class SolverPath {
  Auto,         // Direct when f^phi_q = f, otherwise Contraction
  Direct,       // divide by pi (1 - pi^(n-1)); only valid when f^phi_q = f
  Contraction,  // c <- pi^-1 (known + pi^n phi_q(c)) to a fixed point
};

class FormalGroup;

// Builds the law to total degree precD.  The ring of `frob` is the working
// precision W; the law is stamped at W - (precD - 1) v(pi).  Throws
// DivisibilityFailure or PrecisionExhausted.
FormalGroup build_formal_group(const FrobeniusSeries& frob, unsigned precD,
                               SolverPath path = SolverPath::Auto);

class FormalGroup {
 public:
  const BiSeries& law() const noexcept { return law_; }
  // f at the working precision.
  const FrobeniusSeries& frob() const noexcept { return frob_; }
  unsigned precN() const noexcept { return law_.precN(); }
  unsigned precD() const noexcept { return law_.precD(); }
  unsigned working_precision() const noexcept { return frob_.series().precN(); }
  SolverPath path() const noexcept { return path_; }

  // The unique [a] = aT + O(T^2) with [a]^phi_q o f = f o [a], checked
  // against [a](S(X,Y)) = S([a]X, [a]Y) before it is returned and cached.
  // `a` is lifted to the working ring by its integer coordinates.  Throws
  // NotBaseFixed, DivisibilityFailure or PrecisionExhausted.
  Series endomorphism(const Zq& a) const;

  // Snapshot of the cache, keyed by Zq::to_string of `a` at the law's
  // precision.
  std::map<std::string, Series> cached_endomorphisms() const;

 private:
  friend FormalGroup build_formal_group(const FrobeniusSeries&, unsigned, SolverPath);

  struct Cache {
    std::mutex mu;
    // Keyed by the working-ring lift of `a`.
    std::map<std::string, std::pair<Zq, Series>> entries;
  };

  FrobeniusSeries frob_;
  BiSeries law_;
  SolverPath path_ = SolverPath::Auto;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

struct AxiomResult {
  bool holds = true;
  // Smallest valuation among the residual coefficients; precN when zero.
  unsigned residualValuation = 0;
  // Exponents of the first failing coefficient, (i, j) or (i, j, k).
  std::vector<unsigned> failingIndex;
};

struct AxiomReport {
  AxiomResult commutative;
  AxiomResult associative;
  AxiomResult unital;
  bool all() const { return commutative.holds && associative.holds && unital.holds; }
};

AxiomReport verify_group_axioms(const BiSeries& S);
AxiomReport verify_group_axioms(const FormalGroup& G);

// Residual f(S) - S^phi_q(f(X), f(Y)) at the law's precision.
AxiomResult functional_equation_defect(const FormalGroup& G);

}  // namespace padic

#endif  // PADIC_FORMAL_GROUP_HPP
