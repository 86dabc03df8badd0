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

#include "padic/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "padic/json_io.hpp"
#include "padic/parse.hpp"

namespace padic::cli {

namespace {

constexpr const char* kGuardEnv = "PADIC_DYNAMICS_GUARD";

struct Options {
  unsigned long p = 0;
  unsigned f = 0;
  unsigned precN = 0;
  unsigned precT = 0;
  std::string modulus;
  std::string jsonPath;
  std::string outPath;
  std::map<std::string, std::string> values;
};

// Reads a JSON document, turning parse errors into line:column diagnostics.
json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::InvalidArgument, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    fail(ErrorKind::InvalidArgument, path + ":" + std::to_string(line) + ":" + std::to_string(col) +
                                         ": malformed JSON");
  }
}

std::vector<mpz_class> parse_modulus(const std::string& text) {
  std::vector<mpz_class> out;
  for (const auto& piece : split_top_level(text)) {
    mpz_class v;
    if (piece.empty() || v.set_str(piece, 10) != 0)
      fail(ErrorKind::InvalidArgument, "modulus must be a comma-separated integer list");
    out.push_back(v);
  }
  return out;
}

std::string json_text(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

class Job {
 public:
  Job(std::string command, const Options& o) : command_(std::move(command)), o_(o) {
    if (!o.jsonPath.empty()) {
      doc_ = read_json_file(o.jsonPath);
      if (!doc_.is_object()) fail(ErrorKind::InvalidArgument, "job file must hold an object");
    }
    json ring = doc_.is_object() && doc_.contains("ring") ? doc_.at("ring") : json::object();
    p_ = o.p ? o.p : (ring.contains("p") ? integer_from_json(ring["p"]).get_ui() : 0);
    f_ = o.f ? o.f : (ring.contains("f") ? integer_from_json(ring["f"]).get_ui() : 1);
    n_ = o.precN ? o.precN : (ring.contains("precN") ? integer_from_json(ring["precN"]).get_ui() : 0);
    m_ = o.precT ? o.precT
                 : (doc_.is_object() && doc_.contains("precT")
                        ? static_cast<unsigned>(integer_from_json(doc_["precT"]).get_ui())
                        : 16u);
    if (!o.modulus.empty()) {
      modulus_ = parse_modulus(o.modulus);
    } else if (ring.contains("modulus")) {
      for (const auto& c : ring["modulus"]) modulus_.push_back(integer_from_json(c));
    }
    if (p_ == 0) fail(ErrorKind::InvalidArgument, "--p is required");
    if (n_ == 0) fail(ErrorKind::InvalidArgument, "--precN is required");
    if (m_ == 0) fail(ErrorKind::InvalidArgument, "--precT must be positive");
    base_ = RingSpec::make(p_, f_, n_, modulus_);
    if (const char* g = std::getenv(kGuardEnv)) {
      mpz_class v;
      if (v.set_str(g, 10) != 0 || v < 0 || !v.fits_uint_p())
        fail(ErrorKind::InvalidArgument, std::string(kGuardEnv) + " must be a non-negative integer");
      envGuard_ = static_cast<unsigned>(v.get_ui());
    }
    meta_ = json{{"command", command_}, {"precN", n_}, {"precT", m_}};
  }

  const std::string& command() const { return command_; }
  unsigned precN() const { return n_; }
  unsigned precT() const { return m_; }
  Ring ring(unsigned n) const { return n == n_ ? base_ : base_->with_precision(n); }
  json& meta() { return meta_; }

  std::optional<json> input(const std::string& name) const {
    const auto it = o_.values.find(name);
    if (it != o_.values.end() && !it->second.empty()) return json(it->second);
    if (doc_.is_object()) {
      if (doc_.contains("inputs") && doc_["inputs"].contains(name)) return doc_["inputs"][name];
      if (doc_.contains(name)) return doc_[name];
    }
    return std::nullopt;
  }

  json required(const std::string& name) const {
    auto v = input(name);
    if (!v) fail(ErrorKind::InvalidArgument, "--" + name + " is required");
    return *v;
  }

  unsigned uint_input(const std::string& name, std::optional<unsigned> fallback) const {
    const auto v = input(name);
    if (!v) {
      if (!fallback) fail(ErrorKind::InvalidArgument, "--" + name + " is required");
      return *fallback;
    }
    mpz_class parsed;
    if (!v->is_string())
      parsed = integer_from_json(*v);
    else if (parsed.set_str(v->get<std::string>(), 10) != 0)
      fail(ErrorKind::InvalidArgument, "--" + name + " must be a non-negative integer");
    if (parsed < 0 || !parsed.fits_uint_p())
      fail(ErrorKind::InvalidArgument, "--" + name + " out of range");
    return static_cast<unsigned>(parsed.get_ui());
  }

  // Literal or JSON series at precision n; JSON series from another
  // precision are reduced or lifted by representatives.
  Series series(const std::string& name, unsigned n) const {
    const json j = required(name);
    const Ring r = ring(n);
    if (j.is_string()) return parse_series_literal(j.get<std::string>(), r, m_);
    const Series s = series_from_json(j);
    if (!s.ring()->same_field(*r)) fail(ErrorKind::SpecMismatch, name + " lives over another ring");
    std::vector<Zq> c;
    for (const Zq& x : s.truncated(std::min(s.precT(), m_)).coeffs()) c.emplace_back(r, x.coords());
    return Series(r, std::move(c));
  }

  Zq constant(const json& j, unsigned n) const {
    const Ring r = ring(n);
    if (j.is_object()) return Zq(r, zq_from_json(j).coords());
    return parse_constant(json_text(j), r);
  }

  std::vector<json> list(const std::string& name) const {
    const json j = required(name);
    std::vector<json> out;
    if (j.is_array()) {
      for (const auto& x : j) out.push_back(x);
    } else {
      for (const auto& piece : split_top_level(json_text(j))) out.emplace_back(piece);
    }
    if (out.empty()) fail(ErrorKind::InvalidArgument, "--" + name + " is empty");
    return out;
  }

  // Guard digits: PADIC_DYNAMICS_GUARD when set, else `needed`.
  unsigned guard(unsigned needed) {
    const unsigned g = envGuard_ ? *envGuard_ : needed;
    meta_["guard"] = g;
    meta_["guardSource"] = envGuard_ ? "env" : "auto";
    meta_["workingPrecN"] = n_ + g;
    return g;
  }
  bool env_guard() const { return envGuard_.has_value(); }

  void stamp(unsigned outN) { meta_["outputPrecN"] = outN; }

 private:
  std::string command_;
  const Options& o_;
  json doc_;
  unsigned long p_ = 0;
  unsigned f_ = 1;
  unsigned n_ = 0;
  unsigned m_ = 0;
  std::vector<mpz_class> modulus_;
  Ring base_;
  std::optional<unsigned> envGuard_;
  json meta_;
};

json optional_to_json(const std::optional<unsigned>& v) { return v ? json(*v) : json(nullptr); }

json axiom_to_json(const AxiomResult& r) {
  return json{{"holds", r.holds},
              {"residualValuation", r.residualValuation},
              {"failingIndex", r.failingIndex}};
}

SolverPath parse_path(const std::optional<json>& j) {
  if (!j) return SolverPath::Auto;
  const std::string s = json_text(*j);
  if (s == "auto") return SolverPath::Auto;
  if (s == "direct") return SolverPath::Direct;
  if (s == "contraction") return SolverPath::Contraction;
  fail(ErrorKind::InvalidArgument, "--path must be auto, direct or contraction");
}

// ---------------------------------------------------------------- groups

FormalGroup build_group(Job& job) {
  const unsigned N = job.precN();
  const unsigned M = job.precT();
  const unsigned twist = job.uint_input("twist", 1u);
  const FrobeniusSeries probe = FrobeniusSeries::make(job.series("frob", N), twist);
  const unsigned v = probe.pi().valuation();
  const unsigned W = N + job.guard((M - 1) * v);
  const FrobeniusSeries frob = FrobeniusSeries::make(job.series("frob", W), twist);
  FormalGroup G = build_formal_group(frob, M, parse_path(job.input("path")));
  if (const auto alpha = job.input("alpha")) job.meta()["alpha"] = json_text(*alpha);
  return G;
}

json group_json(const FormalGroup& G, const Ring& out,
                const std::vector<std::pair<std::string, Series>>& endos) {
  json e = json::object();
  for (const auto& [key, s] : endos) e[key] = series_to_json(s.reduced(out));
  return json{{"frob", frobenius_to_json(G.frob().reduced(out))},
              {"law", biseries_to_json(G.law().reduced(out))},
              {"endos", e}};
}

int cmd_fg(Job& job, std::ostream& out, std::ostream& err, bool endos) {
  FormalGroup G = build_group(job);
  const unsigned outN = std::min(job.precN(), G.precN());
  job.stamp(outN);
  const Ring r = job.ring(outN);
  std::vector<std::pair<std::string, Series>> list;
  if (endos)
    for (const json& a : job.list("a"))
      list.emplace_back(json_text(a), G.endomorphism(job.constant(a, G.working_precision())));
  const AxiomReport axioms = verify_group_axioms(G);
  const AxiomResult fe = functional_equation_defect(G);
  json j = group_json(G, r, list);
  j["axioms"] = json{{"commutative", axiom_to_json(axioms.commutative)},
                     {"associative", axiom_to_json(axioms.associative)},
                     {"unital", axiom_to_json(axioms.unital)}};
  j["functionalEquation"] = axiom_to_json(fe);
  j["meta"] = job.meta();
  out << j.dump() << "\n";
  err << job.command() << ": law to total degree " << G.precD() << " over " << r->describe()
      << ", functional-equation residual " << (fe.holds ? "0" : "nonzero") << ", axioms "
      << (axioms.all() ? "hold" : "fail") << "\n";
  return fe.holds && axioms.all() ? kOk : kFailed;
}

// ---------------------------------------------------------------- dynamics

int cmd_log(Job& job, std::ostream& out, std::ostream& err) {
  const unsigned N = job.precN();
  const unsigned M = job.precT();
  const unsigned eff = job.uint_input("effPrec", N);
  const StableNoninvertible probe = StableNoninvertible::make(job.series("P", N));
  const unsigned v = probe.lambda.valuation();
  // The stopping index is not known in advance: widen until it fits.
  unsigned start = std::max(v * M, N);
  for (unsigned attempt = 0;; ++attempt) {
    const unsigned g = job.guard(eff + start > N ? eff + start - N : 0);
    const unsigned W = N + g;
    try {
      const StableNoninvertible sys = StableNoninvertible::make(job.series("P", W));
      const LubinLog L = lubin_log(sys, eff);
      const auto defect = linearization_defect(L.log, sys.P, sys.lambda);
      json j = log_series_to_json(L.log);
      j["stopIndex"] = L.stopIndex;
      j["linearizationDefect"] = optional_to_json(defect);
      job.meta()["attempts"] = attempt + 1;
      job.stamp(eff);
      j["meta"] = job.meta();
      out << j.dump() << "\n";
      err << "log: stopped at n = " << L.stopIndex << ", L o P - lambda L "
          << (defect ? "differs at degree " + std::to_string(*defect) : std::string("vanishes"))
          << " mod p^" << eff << "\n";
      return defect ? kFailed : kOk;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PrecisionExhausted || job.env_guard() || attempt >= 6) throw;
      start *= 2;
    }
  }
}

int cmd_commutant(Job& job, std::ostream& out, std::ostream& err) {
  const unsigned N = job.precN();
  const StableNoninvertible probe = StableNoninvertible::make(job.series("P", N));
  const unsigned W = N + job.guard(intertwiner_precision_loss(probe));
  const StableNoninvertible sys = StableNoninvertible::make(job.series("P", W));
  const Series g = commutant(sys, job.constant(job.required("c"), W));
  const unsigned outN = std::min(N, g.precN());
  job.stamp(outN);
  const Series gs = g.reduced(job.ring(outN));
  const Series Ps = sys.P.reduced(job.ring(outN));
  const auto diff = first_difference(compose(gs, Ps), compose(Ps, gs));
  json j = series_to_json(gs);
  j["commutes"] = !diff;
  j["meta"] = job.meta();
  out << j.dump() << "\n";
  err << "commutant: " << gs.to_string() << "\n";
  return diff ? kFailed : kOk;
}

int cmd_normalize(Job& job, std::ostream& out, std::ostream& err) {
  const unsigned N = job.precN();
  const Series Q0 = job.series("Q", N);
  unsigned needed = 0;
  if (!Q0[0].is_zero()) {
    const NewtonPolygon poly = newton_polygon(Q0 - Series::identity(Q0.ring(), Q0.precT()));
    if (poly.vertices.size() > 1) needed = poly.vertices[1].second;
  }
  const unsigned W = N + job.guard(needed);
  const FixedPointNormalization r = normalize_fixed_point(job.series("Q", W));
  const unsigned outN = std::min(N, r.a.ring()->precN());
  job.stamp(outN);
  const Ring rr = job.ring(outN);
  json j{{"a", zq_to_json(r.a.reduced(rr))},
         {"shifted", series_to_json(r.shifted.reduced(rr))},
         {"polygon", newton_polygon_to_json(r.polygon)},
         {"meta", job.meta()}};
  out << j.dump() << "\n";
  err << "normalize: fixed point a = " << r.a.reduced(rr).to_string() << "\n";
  return kOk;
}

int cmd_seed(Job& job, std::ostream& out, std::ostream& err) {
  const Series P = job.series("P", job.precN());
  const unsigned d = job.uint_input("d", std::nullopt);
  const bool holds = check_phi_iterate_seed(P, d);
  job.guard(0);
  job.stamp(job.precN());
  json j{{"P", series_to_json(P)}, {"d", d}, {"holds", holds}, {"meta", job.meta()}};
  out << j.dump() << "\n";
  err << "seed-check: " << (holds ? "P(0) = 0 and P = T^d mod p" : "not a seed") << "\n";
  return holds ? kOk : kFailed;
}

int cmd_verify_lift(Job& job, std::ostream& out, std::ostream& err) {
  json datum = job.required("datum");
  if (datum.is_string()) datum = read_json_file(datum.get<std::string>());
  const LiftDatum D = lift_datum_from_json(datum, job.ring(job.precN()), job.precT());
  const LiftDatumReport rep = verify_lift_datum(D);
  json members = json::object();
  for (const auto& [label, m] : rep.members)
    members[label] = json{{"regular", m.regular},
                          {"commutesWithP", m.commutesWithP},
                          {"firstFailingDegree", optional_to_json(m.firstFailingDegree)},
                          {"eta", coords_to_json(m.eta)}};
  json table = json::object();
  for (const auto& [key, t] : rep.table)
    table[key.first + "," + key.second] =
        json{{"respected", t.respected},
             {"firstFailingDegree", optional_to_json(t.firstFailingDegree)},
             {"detail", t.detail}};
  job.guard(0);
  job.stamp(job.precN());
  json j{{"pStable", rep.pStable},
         {"members", members},
         {"table", table},
         {"allOk", rep.all_ok()},
         {"meta", job.meta()}};
  out << j.dump() << "\n";
  err << "verify-lift: " << rep.members.size() << " members, " << rep.table.size()
      << " table entries, " << (rep.all_ok() ? "all relations hold" : "some relations fail")
      << "\n";
  return rep.all_ok() ? kOk : kFailed;
}

int cmd_condense(Job& job, std::ostream& out, std::ostream& err) {
  FormalGroup G = build_group(job);
  const unsigned outN = std::min(job.precN(), G.precN());
  job.stamp(outN);
  const Ring r = job.ring(outN);
  std::vector<Zq> W;
  for (const json& w : job.list("W")) W.push_back(job.constant(w, job.precN()));
  const CondensationSetup setup = norm_series(G, W);
  std::vector<Zq> samples;
  json gamma = json::object();
  for (const json& a : job.list("a")) {
    samples.push_back(job.constant(a, G.working_precision()));
    gamma[json_text(a)] = series_to_json(condense(setup, samples.back()).reduced(r));
  }
  const CondensationReport laws = verify_condensation_laws(setup, samples);
  json checks = json::array();
  for (const auto& c : laws.checks)
    checks.push_back(json{{"law", c.law},
                          {"args", c.args},
                          {"holds", c.holds},
                          {"firstFailingDegree", optional_to_json(c.firstFailingDegree)}});
  json wj = json::array();
  std::vector<std::pair<std::string, Series>> endos;
  for (const Zq& w : setup.W) {
    wj.push_back(coords_to_json(w.reduced(r)));
    endos.emplace_back(w.reduced(r).to_string(), G.endomorphism(w));
  }
  json j{{"group", group_json(G, r, endos)},
         {"W", wj},
         {"R", series_to_json(setup.R.reduced(r))},
         {"leading", coords_to_json(setup.leading.reduced(r))},
         {"gamma", gamma},
         {"laws", checks},
         {"meta", job.meta()}};
  out << j.dump() << "\n";
  err << "condense: |W| = " << setup.d << ", R = " << setup.R.reduced(r).to_string() << ", laws "
      << (laws.all() ? "hold" : "fail") << "\n";
  return laws.all() ? kOk : kFailed;
}

int cmd_semiconj_verify(Job& job, std::ostream& out, std::ostream& err) {
  const unsigned N = job.precN();
  SemiConjTriple t{job.series("F", N), job.series("G", N), job.series("h", N),
                   job.uint_input("twist", 0u)};
  const SemiConjReport rep = verify_semiconj(t);
  job.guard(0);
  job.stamp(N);
  json j{{"F", series_to_json(t.F)},
         {"G", series_to_json(t.G)},
         {"h", series_to_json(t.h)},
         {"twist", t.twist},
         {"report",
          json{{"holds", rep.holds},
               {"firstFailingDegree", optional_to_json(rep.firstFailingDegree)},
               {"wdegLeft", optional_to_json(rep.wdegLeft)},
               {"wdegRight", optional_to_json(rep.wdegRight)}}},
         {"meta", job.meta()}};
  out << j.dump() << "\n";
  err << "semiconj-verify: "
      << (rep.holds ? std::string("F o h = h o G holds")
                    : "fails at degree " + (rep.firstFailingDegree
                                                ? std::to_string(*rep.firstFailingDegree)
                                                : std::string("(Weierstrass degrees)")))
      << "\n";
  return rep.holds ? kOk : kFailed;
}

int cmd_semiconj_solve(Job& job, std::ostream& out, std::ostream& err) {
  const unsigned N = job.precN();
  const unsigned twist = job.uint_input("twist", 0u);
  const StableNoninvertible probe = StableNoninvertible::make(job.series("G", N));
  const unsigned W = N + job.guard(intertwiner_precision_loss(probe));
  const StableNoninvertible F = StableNoninvertible::make(job.series("F", W));
  const StableNoninvertible G = StableNoninvertible::make(job.series("G", W));
  const Series h = solve_semiconj(F, G, job.constant(job.required("c"), W), twist);
  const unsigned outN = std::min(N, h.precN());
  job.stamp(outN);
  const Ring r = job.ring(outN);
  SemiConjTriple t{F.P.reduced(r), G.P.reduced(r), h.reduced(r), twist};
  const SemiConjReport rep = verify_semiconj(t);
  json j{{"F", series_to_json(t.F)},
         {"G", series_to_json(t.G)},
         {"h", series_to_json(t.h)},
         {"twist", twist},
         {"holds", rep.holds},
         {"meta", job.meta()}};
  out << j.dump() << "\n";
  err << "semiconj-solve: h = " << t.h.to_string() << "\n";
  return rep.holds ? kOk : kFailed;
}

int cmd_newton(Job& job, std::ostream& out, std::ostream& err) {
  const Series s = job.series("series", job.precN());
  const NewtonPolygon poly = newton_polygon(s);
  job.guard(0);
  job.stamp(job.precN());
  json j = newton_polygon_to_json(poly);
  j["meta"] = job.meta();
  out << j.dump() << "\n";
  err << "newton: " << poly.segments.size() << " segments" << (poly.provisional ? " (provisional)" : "")
      << "\n";
  return kOk;
}

int cmd_root_profile(Job& job, std::ostream& out, std::ostream& err) {
  const StableNoninvertible sys = StableNoninvertible::make(job.series("P", job.precN()));
  const unsigned n = job.uint_input("n", std::nullopt);
  const auto prof = root_valuation_profile(sys, n);
  json list = json::array();
  for (const auto& s : prof)
    list.push_back(json{{"slope", rational_to_json(s.slope)}, {"multiplicity", s.multiplicity}});
  job.guard(0);
  job.stamp(job.precN());
  json j{{"n", n}, {"profile", list}, {"meta", job.meta()}};
  out << j.dump() << "\n";
  err << "root-profile: " << prof.size() << " slopes at level " << n << "\n";
  return kOk;
}

struct Command {
  const char* name;
  const char* help;
  std::vector<const char*> inputs;
  std::function<int(Job&, std::ostream&, std::ostream&)> fn;
};

std::vector<Command> commands() {
  return {
      {"fg-build", "build a Lubin-Tate formal group law", {"frob", "twist", "path", "alpha"},
       [](Job& j, std::ostream& o, std::ostream& e) { return cmd_fg(j, o, e, false); }},
      {"fg-endo", "formal group endomorphisms [a]", {"frob", "twist", "path", "alpha", "a"},
       [](Job& j, std::ostream& o, std::ostream& e) { return cmd_fg(j, o, e, true); }},
      {"log", "Lubin logarithm of a stable series", {"P", "effPrec"}, cmd_log},
      {"commutant", "series commuting with P with derivative c", {"P", "c"}, cmd_commutant},
      {"normalize", "move the interior fixed point of Q to 0", {"Q"}, cmd_normalize},
      {"seed-check", "check P(0) = 0 and P = T^d mod p", {"P", "d"}, cmd_seed},
      {"verify-lift", "verify a lift datum", {"datum"}, cmd_verify_lift},
      {"condense", "norm series and condensed family", {"frob", "twist", "path", "alpha", "W", "a"},
       cmd_condense},
      {"semiconj-verify", "check F^tau o h = h o G", {"F", "G", "h", "twist"}, cmd_semiconj_verify},
      {"semiconj-solve", "solve F^tau o h = h o G with h'(0) = c", {"F", "G", "c", "twist"},
       cmd_semiconj_solve},
      {"newton", "Newton polygon of a series", {"series"}, cmd_newton},
      {"root-profile", "root valuations of the n-th iterate", {"P", "n"}, cmd_root_profile},
  };
}

}  // namespace

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::PrecisionExhausted:
    case ErrorKind::TruncationTooSmall:
      return kPrecision;
    case ErrorKind::NoCommutant:
    case ErrorKind::NoSolution:
    case ErrorKind::NoInteriorFixedPoint:
    case ErrorKind::NotInSubring:
      return kFailed;
    default:
      return kBadInput;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact p-adic power series, Lubin-Tate groups and dynamics", "padic-dynamics"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--p", o.p, "prime");
  app.add_option("--f", o.f, "degree of the unramified coefficient ring (default 1)");
  app.add_option("--precN", o.precN, "p-adic precision of the outputs");
  app.add_option("--precT", o.precT, "T-adic truncation (default 16)");
  app.add_option("--modulus", o.modulus, "little-endian monic modulus, e.g. 1,0,1");
  app.add_option("--json", o.jsonPath, "job file with ring, precT and inputs");
  app.add_option("--out", o.outPath, "write the result JSON here");

  const auto cmds = commands();
  std::map<const CLI::App*, const Command*> byApp;
  for (const auto& c : cmds) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->set_help_flag("--help", "print this help and exit");
    for (const char* in : c.inputs) sub->add_option(std::string("--") + in, o.values[in]);
    byApp[sub] = &c;
  }

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  const Command& cmd = *byApp.at(chosen);
  try {
    Job job(cmd.name, o);
    std::ostringstream buf;
    const int code = cmd.fn(job, buf, err);
    if (o.outPath.empty()) {
      out << buf.str();
    } else {
      std::ofstream file(o.outPath, std::ios::binary);
      if (!file) fail(ErrorKind::InvalidArgument, "cannot write " + o.outPath);
      file << buf.str();
    }
    return code;
  } catch (const Error& e) {
    err << cmd.name << ": " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const json::exception& e) {
    err << cmd.name << ": malformed input: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    err << cmd.name << ": " << e.what() << "\n";
    return kBadInput;
  }
}

}  // namespace padic::cli
