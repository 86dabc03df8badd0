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

// JSON encodings.  Objects use sorted keys; integers below 2^63 are plain
// numbers and larger ones decimal strings.  Coefficient lists are
// little-endian.

#ifndef PADIC_JSON_IO_HPP
#define PADIC_JSON_IO_HPP

#include <json.hpp>

#include "padic/condense.hpp"
#include "padic/dynamics.hpp"
#include "padic/formal_group.hpp"
#include "padic/log_series.hpp"
#include "padic/semiconj.hpp"

namespace padic {

using nlohmann::json;

json integer_to_json(const mpz_class& x);
mpz_class integer_from_json(const json& j);

// {"p":3,"f":2,"precN":8,"modulus":[1,0,1]}
json ring_to_json(const RingSpec& r);
Ring ring_from_json(const json& j);

json coords_to_json(const Zq& x);
Zq coords_from_json(const json& j, const Ring& ring);

// Ring fields plus "coeffs".
json zq_to_json(const Zq& x);
Zq zq_from_json(const json& j);

// {"ring":...,"precT":M,"coeffs":[[...],...]}
json series_to_json(const Series& s);
Series series_from_json(const json& j);
// Also accepts a literal string, parsed in `ring` at `precT`.
Series series_from_json(const json& j, const Ring& ring, unsigned precT);

// {"ring":...,"precD":M,"triangle":[[S_00, S_01, ...], [S_10, ...], ...]}
json biseries_to_json(const BiSeries& s);
BiSeries biseries_from_json(const json& j);

// {"ring":...,"precT":M,"effPrec":e,"coeffs":[{"denomExp":k,"unit":[...]},...]}
json log_series_to_json(const LogSeries& L);

json rational_to_json(const Rational& r);
json newton_polygon_to_json(const NewtonPolygon& poly);

// Series fields plus "pi", "q" and "twist".
json frobenius_to_json(const FrobeniusSeries& frob);
// {"frob":...,"law":...,"endos":{...}}; frob is shown at the law's precision.
json formal_group_to_json(const FormalGroup& G);

// {"P":<Series>,"members":{"g":<Series>},"table":{"g,h":"k"}}
json lift_datum_to_json(const LiftDatum& D);
LiftDatum lift_datum_from_json(const json& j, const Ring& ring, unsigned precT);

}  // namespace padic

#endif  // PADIC_JSON_IO_HPP
