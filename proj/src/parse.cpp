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

#include "padic/parse.hpp"

#include <cctype>

namespace padic {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const Ring& ring, unsigned precT)
      : s_(text), ring_(ring), m_(precT) {}

  Series parse() {
    Series v = expr();
    skip();
    if (i_ != s_.size()) throw ParseError(i_, "unexpected '" + std::string(1, s_[i_]) + "'");
    return v;
  }

  bool saw_t() const { return sawT_; }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool starts_atom() {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'T' || c == 'x' || c == '(' ||
           s_.compare(i_, 5, "teich") == 0;
  }

  Series expr() {
    Series v = term();
    for (;;) {
      const char c = peek();
      if (c == '+') {
        ++i_;
        v = v + term();
      } else if (c == '-') {
        ++i_;
        v = v - term();
      } else {
        return v;
      }
    }
  }

  Series term() {
    Series v = unary();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++i_;
        v = v * unary();
      } else if (c == '/') {
        const std::size_t at = ++i_;
        v = v * invert(unary(), at);
      } else if (starts_atom()) {
        v = v * unary();
      } else {
        return v;
      }
    }
  }

  Series unary() {
    if (peek() == '-') {
      ++i_;
      return -unary();
    }
    return power();
  }

  Series power() {
    Series base = atom();
    if (peek() != '^') return base;
    ++i_;
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++i_;
    }
    const std::size_t at = i_;
    const mpz_class e = integer();
    if (!e.fits_ulong_p()) throw ParseError(at, "exponent too large");
    if (neg) base = invert(base, at);
    return base.pow(e.get_ui());
  }

  Series atom() {
    const char c = peek();
    const std::size_t at = i_;
    if (std::isdigit(static_cast<unsigned char>(c))) return Series::constant(Zq(ring_, integer()), m_);
    if (c == 'T') {
      ++i_;
      sawT_ = true;
      return Series::identity(ring_, m_);
    }
    if (s_.compare(i_, 5, "teich") == 0) {
      i_ += 5;
      if (peek() != '(') throw ParseError(i_, "expected '(' after teich");
      ++i_;
      const bool before = sawT_;
      const Series inner = expr();
      if (peek() != ')') throw ParseError(i_, "expected ')'");
      ++i_;
      for (unsigned k = 1; k < inner.precT(); ++k)
        if (!inner[k].is_zero()) throw ParseError(at, "teich() takes a constant");
      sawT_ = before;
      return Series::constant(Zq::teichmuller(ring_, inner[0].residue()), m_);
    }
    if (c == 'x') {
      ++i_;
      return Series::constant(Zq::generator(ring_), m_);
    }
    if (c == '(') {
      ++i_;
      Series v = expr();
      if (peek() != ')') throw ParseError(i_, "expected ')'");
      ++i_;
      return v;
    }
    if (c == '\0') throw ParseError(i_, "unexpected end of input");
    throw ParseError(i_, "unexpected '" + std::string(1, c) + "'");
  }

  mpz_class integer() {
    skip();
    const std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) throw ParseError(start, "expected an integer");
    return mpz_class(s_.substr(start, i_ - start));
  }

  Series invert(const Series& v, std::size_t at) const {
    if (v.precT() == 0 || !v[0].is_unit()) throw ParseError(at, "division needs a unit constant term");
    return v.reciprocal();
  }

  const std::string& s_;
  Ring ring_;
  unsigned m_;
  std::size_t i_ = 0;
  bool sawT_ = false;
};

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace

Series parse_series_literal(const std::string& text, const Ring& ring, unsigned precT) {
  if (precT == 0) fail(ErrorKind::InvalidArgument, "precT must be positive");
  return Parser(text, ring, precT).parse();
}

Zq parse_constant(const std::string& text, const Ring& ring) {
  Parser p(text, ring, 1);
  const Series v = p.parse();
  if (p.saw_t()) throw ParseError(0, "expected a constant, found T");
  return v[0];
}

std::vector<std::string> split_top_level(const std::string& text, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (const char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
  return out;
}

}  // namespace padic
