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

#include "padic/json_io.hpp"

#include <algorithm>

#include "padic/parse.hpp"

namespace padic {

namespace {

const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    fail(ErrorKind::InvalidArgument, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

unsigned small_uint(const json& j, const char* what) {
  const mpz_class v = integer_from_json(j);
  if (v < 0 || !v.fits_uint_p()) fail(ErrorKind::InvalidArgument, std::string(what) + " out of range");
  return static_cast<unsigned>(v.get_ui());
}

const json& need_array(const json& j, const char* what) {
  if (!j.is_array()) fail(ErrorKind::InvalidArgument, std::string(what) + " must be an array");
  return j;
}

}  // namespace

json integer_to_json(const mpz_class& x) {
  if (x.fits_slong_p()) return json(static_cast<std::int64_t>(x.get_si()));
  return json(x.get_str());
}

mpz_class integer_from_json(const json& j) {
  if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    mpz_class v;
    if (v.set_str(j.get<std::string>(), 10) != 0)
      fail(ErrorKind::InvalidArgument, "not an integer: \"" + j.get<std::string>() + "\"");
    return v;
  }
  fail(ErrorKind::InvalidArgument, "expected an integer, found " + j.dump());
}

json ring_to_json(const RingSpec& r) {
  json mod = json::array();
  for (const auto& c : r.modulus()) mod.push_back(integer_to_json(c));
  return json{{"p", r.p()}, {"f", r.f()}, {"precN", r.precN()}, {"modulus", mod}};
}

Ring ring_from_json(const json& j) {
  const mpz_class p = integer_from_json(need(j, "p"));
  if (p < 2 || !p.fits_ulong_p()) fail(ErrorKind::InvalidArgument, "p out of range");
  const unsigned f = small_uint(need(j, "f"), "f");
  const unsigned n = small_uint(need(j, "precN"), "precN");
  std::vector<mpz_class> mod;
  if (j.contains("modulus"))
    for (const auto& c : need_array(j.at("modulus"), "modulus")) mod.push_back(integer_from_json(c));
  return RingSpec::make(p.get_ui(), f, n, std::move(mod));
}

json coords_to_json(const Zq& x) {
  json a = json::array();
  for (const auto& c : x.coords()) a.push_back(integer_to_json(c));
  return a;
}

Zq coords_from_json(const json& j, const Ring& ring) {
  if (j.is_number() || (j.is_string())) return Zq(ring, integer_from_json(j));
  std::vector<mpz_class> c;
  for (const auto& x : need_array(j, "coefficient")) c.push_back(integer_from_json(x));
  if (c.size() != ring->f())
    fail(ErrorKind::InvalidArgument, "coefficient has " + std::to_string(c.size()) +
                                         " coordinates, expected " + std::to_string(ring->f()));
  return Zq(ring, std::move(c));
}

json zq_to_json(const Zq& x) {
  json j = ring_to_json(*x.ring());
  j["coeffs"] = coords_to_json(x);
  return j;
}

Zq zq_from_json(const json& j) { return coords_from_json(need(j, "coeffs"), ring_from_json(j)); }

json series_to_json(const Series& s) {
  json c = json::array();
  for (const Zq& x : s.coeffs()) c.push_back(coords_to_json(x));
  return json{{"ring", ring_to_json(*s.ring())}, {"precT", s.precT()}, {"coeffs", c}};
}

Series series_from_json(const json& j) {
  const Ring ring = ring_from_json(need(j, "ring"));
  const unsigned m = small_uint(need(j, "precT"), "precT");
  const json& c = need_array(need(j, "coeffs"), "coeffs");
  if (c.size() > m) fail(ErrorKind::InvalidArgument, "more coefficients than precT");
  std::vector<Zq> v;
  for (const auto& x : c) v.push_back(coords_from_json(x, ring));
  while (v.size() < m) v.push_back(Zq::zero(ring));
  return Series(ring, std::move(v));
}

Series series_from_json(const json& j, const Ring& ring, unsigned precT) {
  if (j.is_string()) return parse_series_literal(j.get<std::string>(), ring, precT);
  if (j.is_array()) {
    if (j.size() > precT) fail(ErrorKind::InvalidArgument, "more coefficients than precT");
    std::vector<Zq> c;
    for (const json& x : j) c.push_back(coords_from_json(x, ring));
    c.resize(precT, Zq::zero(ring));
    return Series(ring, std::move(c));
  }
  const Series s = series_from_json(j);
  if (!s.ring()->same_field(*ring)) fail(ErrorKind::SpecMismatch, "series from another ring");
  // Never claim more digits than the input carries.
  const Ring target = s.precN() < ring->precN() ? s.ring() : ring;
  return s.reduced(target).truncated(std::min(s.precT(), precT));
}

json biseries_to_json(const BiSeries& s) {
  json rows = json::array();
  for (unsigned i = 0; i < s.precD(); ++i) {
    json row = json::array();
    for (unsigned j = 0; i + j < s.precD(); ++j) row.push_back(coords_to_json(s.at(i, j)));
    rows.push_back(row);
  }
  return json{{"ring", ring_to_json(*s.ring())}, {"precD", s.precD()}, {"triangle", rows}};
}

BiSeries biseries_from_json(const json& j) {
  const Ring ring = ring_from_json(need(j, "ring"));
  const unsigned m = small_uint(need(j, "precD"), "precD");
  const json& rows = need_array(need(j, "triangle"), "triangle");
  if (rows.size() != m) fail(ErrorKind::InvalidArgument, "triangle must have precD rows");
  BiSeries s(ring, m);
  for (unsigned i = 0; i < m; ++i) {
    const json& row = need_array(rows[i], "triangle row");
    if (row.size() != m - i)
      fail(ErrorKind::InvalidArgument, "triangle row " + std::to_string(i) + " has wrong length");
    for (unsigned k = 0; k < m - i; ++k) s.set(i, k, coords_from_json(row[k], ring));
  }
  return s;
}

json log_series_to_json(const LogSeries& L) {
  json c = json::array();
  for (const auto& lc : L.coeffs())
    c.push_back(json{{"denomExp", lc.denomExp}, {"unit", coords_to_json(lc.unit)}});
  return json{{"ring", ring_to_json(*L.ring())},
              {"precT", L.precT()},
              {"effPrec", L.effPrec()},
              {"coeffs", c}};
}

json rational_to_json(const Rational& r) { return r.to_string(); }

json newton_polygon_to_json(const NewtonPolygon& poly) {
  json v = json::array();
  for (const auto& [k, val] : poly.vertices) v.push_back(json::array({k, val}));
  json s = json::array();
  for (const auto& seg : poly.segments)
    s.push_back(json{{"slope", rational_to_json(seg.slope)}, {"length", seg.length}});
  return json{{"vertices", v}, {"segments", s}, {"provisional", poly.provisional}};
}

json frobenius_to_json(const FrobeniusSeries& frob) {
  json j = series_to_json(frob.series());
  j["pi"] = coords_to_json(frob.pi());
  j["q"] = frob.q();
  j["twist"] = frob.twist();
  return j;
}

json formal_group_to_json(const FormalGroup& G) {
  json endos = json::object();
  for (const auto& [key, s] : G.cached_endomorphisms()) endos[key] = series_to_json(s);
  return json{{"frob", frobenius_to_json(G.frob().reduced(G.law().ring()))},
              {"law", biseries_to_json(G.law())},
              {"endos", endos}};
}

json lift_datum_to_json(const LiftDatum& D) {
  json members = json::object();
  for (const auto& [label, s] : D.members) members[label] = series_to_json(s);
  json table = json::object();
  for (const auto& [key, k] : D.table) table[key.first + "," + key.second] = k;
  return json{{"P", series_to_json(D.P)}, {"members", members}, {"table", table}};
}

LiftDatum lift_datum_from_json(const json& j, const Ring& ring, unsigned precT) {
  LiftDatum D;
  D.P = series_from_json(need(j, "P"), ring, precT);
  const json& members = need(j, "members");
  if (!members.is_object()) fail(ErrorKind::InvalidArgument, "members must be an object");
  for (const auto& [label, s] : members.items())
    D.members.emplace(label, series_from_json(s, ring, precT));
  if (j.contains("table")) {
    const json& table = j.at("table");
    if (!table.is_object()) fail(ErrorKind::InvalidArgument, "table must be an object");
    for (const auto& [key, target] : table.items()) {
      const auto parts = split_top_level(key);
      if (parts.size() != 2 || !target.is_string())
        fail(ErrorKind::InvalidArgument, "table entries look like \"g,h\": \"k\"");
      D.table.emplace(std::make_pair(parts[0], parts[1]), target.get<std::string>());
    }
  }
  return D;
}

}  // namespace padic
