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

// Series literals such as "(1+T)^3-1", "3*teich(x+1)*T + T^3" or "1/(1+T)".
//
//   expr   := term (("+" | "-") term)*
//   term   := unary (("*" | "/")? unary)*      juxtaposition multiplies
//   unary  := "-" unary | power
//   power  := atom ("^" "-"? integer)?
//   atom   := integer | "T" | "x" | "(" expr ")" | "teich" "(" expr ")"
//
// "x" is the generator of the coefficient ring; teich() takes a constant
// and returns the Teichmuller lift of its residue.  Division and negative
// powers need a unit constant term.

#ifndef PADIC_PARSE_HPP
#define PADIC_PARSE_HPP

#include <string>
#include <vector>

#include "padic/series.hpp"

namespace padic {

// Throws ParseError (with a character offset) on bad syntax.
Series parse_series_literal(const std::string& text, const Ring& ring, unsigned precT);

// A literal without T.
Zq parse_constant(const std::string& text, const Ring& ring);

// Splits on `sep` outside parentheses; pieces are trimmed.
std::vector<std::string> split_top_level(const std::string& text, char sep = ',');

}  // namespace padic

#endif  // PADIC_PARSE_HPP
