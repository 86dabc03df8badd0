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

// Unramified p-adic integers Z_q = W(F_q) computed modulo p^N.
//
// An element is a polynomial of degree < f in the generator x, where x is a
// root of the stored monic modulus.  Its reduction mod p is irreducible, so
// {1, x, ..., x^(f-1)} is an integral basis and the valuation of an element
// is the minimum valuation of its coordinates.

#ifndef PADIC_ZQ_HPP
#define PADIC_ZQ_HPP

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "padic/errors.hpp"

namespace padic {

class RingSpec;
using Ring = std::shared_ptr<const RingSpec>;

class RingSpec {
 public:
  // An empty modulus selects the default: the first monic polynomial of
  // degree f, enumerating constant coefficient fastest, that is irreducible
  // mod p.  For f = 1 that is x itself.
  static Ring make(unsigned long p, unsigned f, unsigned precN,
                   std::vector<mpz_class> modulus = {});

  unsigned long p() const noexcept { return p_; }
  unsigned f() const noexcept { return f_; }
  unsigned precN() const noexcept { return precN_; }
  const mpz_class& pN() const noexcept { return pN_; }
  // Residue cardinality p^f.
  const mpz_class& q() const noexcept { return q_; }
  // Little-endian, monic, length f + 1, entries in [0, p^N).
  const std::vector<mpz_class>& modulus() const noexcept { return modulus_; }

  // Same ring with a different p-adic precision.  Lowering reduces the
  // modulus; raising reuses the stored integer modulus as the lift.
  Ring with_precision(unsigned n) const;

  // Same p, f and modulus modulo p^min(N, N').
  bool same_field(const RingSpec& other) const;
  bool operator==(const RingSpec& other) const;

  // Column i holds the coordinates of phi(x^i) where phi lifts y -> y^p.
  const std::vector<std::vector<mpz_class>>& frobenius_images() const noexcept {
    return frob_;
  }

  std::string describe() const;

 private:
  RingSpec() = default;

  unsigned long p_ = 0;
  unsigned f_ = 0;
  unsigned precN_ = 0;
  mpz_class pN_;
  mpz_class q_;
  std::vector<mpz_class> modulus_;
  std::vector<std::vector<mpz_class>> frob_;
};

// Ring pointers compare by identity first, then by value.
bool same_ring(const Ring& a, const Ring& b);
// Common ring for mixed-precision operands: minimum precision.  Throws
// SpecMismatch when the fields differ.
Ring common_ring(const Ring& a, const Ring& b);

class Zq {
 public:
  Zq() = default;
  explicit Zq(Ring ring);
  Zq(Ring ring, std::vector<mpz_class> coords);
  Zq(Ring ring, const mpz_class& value);
  Zq(Ring ring, long value) : Zq(std::move(ring), mpz_class(value)) {}

  static Zq zero(const Ring& ring) { return Zq(ring); }
  static Zq one(const Ring& ring) { return Zq(ring, 1L); }
  // The generator x, i.e. the class of the variable modulo the modulus.
  static Zq generator(const Ring& ring);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<mpz_class>& coords() const noexcept { return c_; }

  bool is_zero() const;
  bool is_unit() const { return valuation() == 0; }
  // Largest k <= N with p^k | x; N for the zero residue.
  unsigned valuation() const;

  Zq operator+(const Zq& o) const;
  Zq operator-(const Zq& o) const;
  Zq operator*(const Zq& o) const;
  Zq operator-() const;
  Zq& operator+=(const Zq& o);
  Zq& operator-=(const Zq& o);
  Zq& operator*=(const Zq& o);
  bool operator==(const Zq& o) const;
  bool operator!=(const Zq& o) const { return !(*this == o); }

  Zq pow(const mpz_class& e) const;
  Zq pow(unsigned long e) const { return pow(mpz_class(e)); }
  // Throws NonUnit unless valuation() == 0.
  Zq inverse() const;
  // Exact division by p^k; throws DivisibilityFailure if p^k does not divide
  // the representative.  The top k digits of the result are zero.
  Zq divide_by_p_power(unsigned k) const;
  // Multiplication by p^k.
  Zq times_p_power(unsigned k) const;
  // k-fold application of the absolute Frobenius lift.
  Zq frobenius(unsigned k = 1) const;
  // Coordinates reduced mod p.
  std::vector<unsigned long> residue() const;
  Zq reduced(const Ring& lower) const;

  // Lift of a residue (coordinates mod p) fixed by x -> x^q.
  static Zq teichmuller(const Ring& ring, const std::vector<unsigned long>& r);

  std::string to_string() const;

 private:
  void reduce();

  Ring ring_;
  std::vector<mpz_class> c_;
};

// Sums of products without intermediate reduction; used in the series
// kernels where most of the time goes.
class ZqAccumulator {
 public:
  explicit ZqAccumulator(const Ring& ring);
  void clear();
  void addmul(const Zq& a, const Zq& b);
  void add(const Zq& a);
  void sub(const Zq& a);
  Zq result() const;

 private:
  Ring ring_;
  std::vector<mpz_class> acc_;
};

// First residue, enumerating coordinates base p with the constant digit
// fastest, that generates the multiplicative group of the residue field.
std::vector<unsigned long> primitive_residue(const Ring& ring);

}  // namespace padic

#endif  // PADIC_ZQ_HPP
