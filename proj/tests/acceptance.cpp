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

// End-to-end acceptance checks.  Prints one PASS/FAIL line per check and
// exits nonzero when any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "padic/cli.hpp"
#include "padic/condense.hpp"
#include "padic/dynamics.hpp"
#include "padic/formal_group.hpp"
#include "padic/json_io.hpp"
#include "padic/parse.hpp"
#include "padic/semiconj.hpp"

using namespace padic;

namespace {

struct Failure {
  std::string why;
};

void check(bool ok, const std::string& why) {
  if (!ok) throw Failure{why};
}

Series lit(const std::string& s, const Ring& r, unsigned m) { return parse_series_literal(s, r, m); }

Series binomial_minus_one(const Ring& r, long a, unsigned m) {
  return oracle::to_series(r, oracle::binomial_minus_one(a, m), m);
}

std::string show(const std::optional<unsigned>& d) {
  return d ? "degree " + std::to_string(*d) : std::string("none");
}

// ---------------------------------------------------------------------------

std::string multiplicative_oracle() {
  for (unsigned long p : {2ul, 3ul, 5ul}) {
    const Ring R = RingSpec::make(p, 1, 8 + 15);
    const Series f = binomial_minus_one(R, static_cast<long>(p), 16);
    const FormalGroup G = build_formal_group(FrobeniusSeries::make(f), 16);
    check(G.precN() == 8, "stamped precision " + std::to_string(G.precN()));
    BiSeries expected = BiSeries::x_plus_y(G.law().ring(), 16);
    expected.set(1, 1, Zq::one(G.law().ring()));
    check(G.law() == expected, "p = " + std::to_string(p) + ": law is not X + Y + XY");
    for (long a : {1L, 2L, 3L, static_cast<long>(p)}) {
      const Series e = G.endomorphism(Zq(R, a));
      check(e.precN() == 8 && oracle::matches(e, oracle::binomial_minus_one(a, 16)),
            "p = " + std::to_string(p) + ": [" + std::to_string(a) + "] is not (1+T)^a - 1");
    }
  }
  return "p in {2,3,5}: law X+Y+XY, [a] = (1+T)^a - 1 for a in {1,2,3,p} at (p^8, deg 16)";
}

std::string twisted_construction() {
  const unsigned N = 6, M = 12;
  const Ring R = RingSpec::make(3, 2, N + M - 1);
  const Zq omega = Zq::teichmuller(R, primitive_residue(R));
  check(omega.pow(8ul) == Zq::one(R) && omega.pow(4ul) != Zq::one(R), "omega is not a generator");
  const Series f = Series::monomial(omega * Zq(R, 3L), 1, M) + Series::monomial(Zq::one(R), 3, M);
  const FormalGroup G = build_formal_group(FrobeniusSeries::make(f, 2), M);
  check(G.precN() == N, "stamped precision");
  check(G.path() == SolverPath::Auto, "path");
  const AxiomResult fe = functional_equation_defect(G);
  check(fe.holds, "functional-equation residual nonzero");
  check(verify_group_axioms(G).all(), "group axioms fail");

  // Pointwise: f(S(a,b)) = S^phi(f(a), f(b)) for a, b in the maximal ideal,
  // where the truncated tail has valuation >= M >= N.
  const Ring RN = G.law().ring();
  const Series fN = f.reduced(RN);
  auto eval2 = [&](const BiSeries& S, const Zq& a, const Zq& b) {
    Zq acc = Zq::zero(RN);
    for (unsigned i = 0; i < M; ++i)
      for (unsigned j = 0; i + j < M; ++j) acc += S.at(i, j) * a.pow(static_cast<unsigned long>(i)) * b.pow(static_cast<unsigned long>(j));
    return acc;
  };
  oracle::Gen gen(2);
  for (int t = 0; t < 20; ++t) {
    const Zq a = gen.element(RN) * Zq(RN, 3L);
    const Zq b = gen.element(RN) * Zq(RN, 3L);
    const Zq lhs = fN.evaluate_polynomial(eval2(G.law(), a, b));
    const Zq rhs = eval2(G.law().frobenius(1), fN.evaluate_polynomial(a), fN.evaluate_polynomial(b));
    check(lhs == rhs, "pointwise functional equation fails");
  }

  // pi = 3 lies in the base: classical solver, twisted solver and the law
  // built over Z_3 must agree bit for bit.
  const Series f3 = lit("3*T + T^3", R, M);
  const FormalGroup direct = build_formal_group(FrobeniusSeries::make(f3, 2), M, SolverPath::Direct);
  const FormalGroup twisted = build_formal_group(FrobeniusSeries::make(f3, 2), M, SolverPath::Contraction);
  check(biseries_to_json(direct.law()).dump() == biseries_to_json(twisted.law()).dump(),
        "direct and contraction laws differ");
  for (long a : {2L, 4L, -1L})
    check(series_to_json(direct.endomorphism(Zq(R, a))).dump() ==
              series_to_json(twisted.endomorphism(Zq(R, a))).dump(),
          "direct and contraction [a] differ");
  const Ring R1 = RingSpec::make(3, 1, N + M - 1);
  const FormalGroup classical = build_formal_group(FrobeniusSeries::make(lit("3*T + T^3", R1, M)), M);
  for (unsigned i = 0; i < M; ++i)
    for (unsigned j = 0; i + j < M; ++j) {
      const auto& c = direct.law().at(i, j).coords();
      check(c[0] == classical.law().at(i, j).coords()[0] && c[1] == 0,
            "law over Z_9 differs from the law over Z_3");
    }
  return "Z_9, f = 3 omega T + T^3: residual 0 mod (3^6, deg 12), axioms hold, classical paths bit-identical";
}

std::string endomorphism_ring_laws() {
  const Ring R = RingSpec::make(3, 1, 6 + 15);
  const FormalGroup G = build_formal_group(FrobeniusSeries::make(lit("3*T + T^3", R, 16)), 16);
  oracle::Gen gen(3);
  const long pool[] = {2, 4, 5};
  for (int t = 0; t < 20; ++t) {
    const long a = pool[gen.range(0, 2)], b = pool[gen.range(0, 2)];
    const Series ea = G.endomorphism(Zq(R, a)), eb = G.endomorphism(Zq(R, b));
    check(ea.precN() == 6 && ea.precT() == 16, "precision");
    const auto d1 = first_difference(compose(ea, eb), G.endomorphism(Zq(R, a * b)));
    check(!d1, "[a] o [b] != [ab] for a=" + std::to_string(a) + ", b=" + std::to_string(b) + " at " + show(d1));
    const auto d2 = first_difference(bi_eval(G.law(), ea, eb), G.endomorphism(Zq(R, a + b)));
    check(!d2, "S([a],[b]) != [a+b] at " + show(d2));
  }
  return "f = 3T + T^3: [a]o[b] = [ab] and S([a],[b]) = [a+b] on 20 random pairs at (3^6, T^16)";
}

// |X/p^e - (-1)^(k-1)/k| <= p^-eff for every k, by integer arithmetic.
bool log_matches_oracle(const LogSeries& L, unsigned eff) {
  const unsigned long p = L.ring()->p();
  for (unsigned k = 1; k < L.precT(); ++k) {
    const mpz_class X = L[k].unit.coords()[0];
    const unsigned e = L[k].denomExp;
    mpz_class pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), p, e);
    const mpz_class sign = (k % 2) ? 1 : -1;
    const mpz_class num = X * static_cast<long>(k) - sign * pe;
    const unsigned vk = oracle::valuation(mpz_class(static_cast<long>(k)), p, 1000);
    if (num != 0 && oracle::valuation(num, p, 1000) < eff + e + vk) return false;
  }
  return L[0].unit.is_zero();
}

std::string lubin_logarithm() {
  const unsigned eff = 5, M = 16;
  const Ring R = RingSpec::make(3, 1, 40);
  const StableNoninvertible P = StableNoninvertible::make(lit("(1+T)^3 - 1", R, M));
  const LubinLog L = lubin_log(P, eff);
  check(L.log.precT() == M && L.log.effPrec() == eff, "shape");
  check(log_matches_oracle(L.log, eff), "L differs from log(1+T) mod 3^5");
  check(!linearization_defect(L.log, P.P, P.lambda), "L o P != 3 L");
  const StableNoninvertible Q = StableNoninvertible::make(lit("3*T + T^3", R, M));
  const LubinLog LQ = lubin_log(Q, eff);
  const auto d = linearization_defect(LQ.log, Q.P, Q.lambda);
  check(!d, "L o P - 3L nonzero at " + show(d));
  return "P = (1+T)^3-1: L = log(1+T) mod 3^5 to T^16, L o P = 3L; P = 3T+T^3: L o P - 3L = 0";
}

std::string commutant_uniqueness() {
  const Ring R = RingSpec::make(3, 1, 30);
  const StableNoninvertible P = StableNoninvertible::make(lit("(1+T)^3 - 1", R, 16));
  const Series g2 = commutant(P, Zq(R, 2L));
  check(g2.precN() == 30 - 14, "stamped precision");
  check(g2 == lit("2*T + T^2", g2.ring(), 16), "commutant(P, 2) != 2T + T^2");
  const LubinLog L = lubin_log(P, 5);
  oracle::Gen gen(5);
  for (int t = 0; t < 10; ++t) {
    const Zq c1 = gen.unit(R), c2 = gen.unit(R);
    const Series g1 = commutant(P, c1), h2 = commutant(P, c2);
    const auto d = first_difference(compose(g1, h2), commutant(P, c1 * c2));
    check(!d, "commutant(c1) o commutant(c2) != commutant(c1 c2) at " + show(d));
    const auto l = linearization_defect(L.log, g1, c1);
    check(!l, "L o g != c L at " + show(l));
  }
  return "commutant((1+T)^3-1, 2) = 2T+T^2; composition law and L o g = cL on 10 random unit pairs";
}

std::string fixed_point_normalization() {
  const Ring R = RingSpec::make(3, 1, 3);
  const Series Q = lit("3 + 3*T + T^3", R, 8);
  const FixedPointNormalization r = normalize_fixed_point(Q);
  // Exhaustive: every a in 3Z/27 with a^3 + 2a + 3 = 0 mod 27.
  std::vector<long> roots;
  for (long a = 0; a < 27; a += 3)
    if ((a * a * a + 2 * a + 3) % 27 == 0) roots.push_back(a);
  check(roots.size() == 1 && roots[0] == 12, "exhaustive search did not single out 12");
  check(r.a.ring()->precN() == 3 && r.a == Zq(r.a.ring(), 12L), "a = " + r.a.to_string());
  check(r.shifted[0].is_zero(), "Qshifted(0) != 0");
  check(!r.polygon.segments.empty() && r.polygon.segments[0].slope == Rational(-1) &&
            r.polygon.segments[0].length == 1,
        "leading segment is not (slope -1, length 1)");
  return "Q = 3 + 3T + T^3 mod 27: a = 12 (unique by exhaustive search), Qshifted(0) = 0, leading segment (-1, 1)";
}

std::string condensation() {
  for (unsigned long p : {3ul, 5ul}) {
    const Ring R = RingSpec::make(p, 1, 8 + 15);
    const FormalGroup G = build_formal_group(
        FrobeniusSeries::make(binomial_minus_one(R, static_cast<long>(p), 16)), 16);
    const CondensationSetup s = norm_series(G, {Zq(R, 1L), Zq(R, -1L)});
    oracle::QPoly r(16, 0);
    for (unsigned k = 2; k < 16; ++k) r[k] = (k % 2) ? 1 : -1;
    check(oracle::matches(s.R, r), "R != -T^2 + T^3 - ...");
    const Series g2 = condense(s, Zq(R, 2L));
    check(g2.precT() == 8 && oracle::matches(g2, oracle::QPoly{0, 4, -1}), "Gamma_2 != 4T - T^2");
    for (long a : {2L, 3L, 4L, 6L, static_cast<long>(p)}) {
      const Series g = condense(s, Zq(R, a));
      check(oracle::matches(g, oracle::condensed_multiplicative(a, 8)),
            "Gamma_" + std::to_string(a) + " differs from 2 - D_a(2 - T)");
      check(g[1] == Zq(g.ring(), a * a), "Gamma_a'(0) != a^2");
    }
    const auto d = first_difference(compose(g2, condense(s, Zq(R, 3L))), condense(s, Zq(R, 6L)));
    check(!d, "Gamma_2 o Gamma_3 != Gamma_6 at " + show(d));
    const Series gp = condense(s, Zq(R, static_cast<long>(p)));
    const Series red = reduce_mod_p(gp);
    check(red == Series::monomial(Zq::one(red.ring()), static_cast<unsigned>(p), red.precT()),
          "Gamma_p != T^p mod p");
    check(check_phi_iterate_seed(gp, p), "Gamma_p is not a phi-iterate seed");
  }
  return "p in {3,5}, W = {1,-1}: R exact, Gamma_a = 2 - D_a(2-T), Gamma_2 o Gamma_3 = Gamma_6, Gamma_p = T^p mod p, seed check";
}

std::string derivative_determines_series() {
  for (unsigned long p : {3ul, 5ul}) {
    const Ring R = RingSpec::make(p, 1, 8 + 15);
    const FormalGroup G = build_formal_group(
        FrobeniusSeries::make(binomial_minus_one(R, static_cast<long>(p), 16)), 16);
    const CondensationSetup s = norm_series(G, {Zq(R, 1L), Zq(R, -1L)});
    for (long a : {2L, 3L}) {
      check(condense(s, Zq(R, a)) == condense(s, Zq(R, -a)), "Gamma_a != Gamma_-a");
    }
    const CondensationReport rep =
        verify_condensation_laws(s, {Zq(R, 2L), Zq(R, -2L), Zq(R, 3L), Zq(R, -3L)});
    check(rep.all(), "condensation laws report a failure");
  }
  return "d = 2: Gamma_a = Gamma_-a for a in {2,3}, p in {3,5}";
}

// Every single-coefficient unit perturbation of every member must be caught.
void perturbations_fail(const LiftDatum& D, const std::string& name) {
  for (const auto& [label, F] : D.members)
    for (unsigned k = 1; k < F.precT(); ++k) {
      LiftDatum bad = D;
      bad.members[label] = F + Series::monomial(Zq::one(F.ring()), k, F.precT());
      const LiftDatumReport rep = verify_lift_datum(bad);
      check(!rep.all_ok(), name + ": perturbing " + label + " at T^" + std::to_string(k) + " passed");
      check(rep.members.at(label).firstFailingDegree.has_value(),
            name + ": no failing degree reported for " + label);
    }
}

std::string lift_datum() {
  const Ring R = RingSpec::make(3, 1, 6);
  LiftDatum cyc;
  cyc.P = binomial_minus_one(R, 3, 12);
  for (long c : {2L, 4L, 5L}) cyc.members[std::to_string(c)] = binomial_minus_one(R, c, 12);
  cyc.table[{"2", "2"}] = "4";
  const LiftDatumReport rc = verify_lift_datum(cyc);
  check(rc.all_ok(), "cyclotomic datum fails");
  for (long c : {2L, 4L, 5L})
    check(rc.members.at(std::to_string(c)).eta == Zq(R, c), "eta(c) != c");
  perturbations_fail(cyc, "cyclotomic");

  const Ring RW = RingSpec::make(3, 1, 8 + 15);
  const FormalGroup G = build_formal_group(FrobeniusSeries::make(binomial_minus_one(RW, 3, 16)), 16);
  const CondensationSetup s = norm_series(G, {Zq(RW, 1L), Zq(RW, -1L)});
  LiftDatum cond;
  cond.P = condense(s, Zq(RW, 3L));
  for (long c : {2L, 4L, 5L}) cond.members[std::to_string(c)] = condense(s, Zq(RW, c));
  cond.table[{"2", "2"}] = "4";
  const LiftDatumReport rd = verify_lift_datum(cond);
  check(rd.all_ok(), "condensed datum fails");
  for (long c : {2L, 4L, 5L})
    check(rd.members.at(std::to_string(c)).eta == Zq(cond.P.ring(), c * c), "eta(c) != c^2");
  perturbations_fail(cond, "condensed");
  return "cyclotomic datum passes with eta(c) = c, condensed with eta(c) = c^2; every unit perturbation caught";
}

std::string semi_conjugacy() {
  const Ring R = RingSpec::make(3, 1, 8 + 15);
  const FormalGroup G = build_formal_group(FrobeniusSeries::make(binomial_minus_one(R, 3, 16)), 16);
  const CondensationSetup s = norm_series(G, {Zq(R, 1L), Zq(R, -1L)});
  const SemiConjReport r1 =
      verify_semiconj({condense(s, Zq(R, 2L)), G.endomorphism(Zq(R, 2L)), s.R, 0});
  check(r1.holds, "Gamma_2 o R != R o [2] at " + show(r1.firstFailingDegree));

  const unsigned M = 16, N = 6;
  const Ring RW = RingSpec::make(3, 1, N + M - 2);
  const Series v = lit("T + T^2", RW, M);
  const Series vinv = comp_inverse(v);
  const Series Gs = lit("3*T + T^3", RW, M);
  const Series Fs = compose(vinv, compose(Gs, v));
  const Series h = solve_semiconj(StableNoninvertible::make(Fs), StableNoninvertible::make(Gs),
                                  Zq::one(RW));
  check(h.precN() == N, "stamped precision");
  check(h == vinv.reduced(h.ring()), "solver did not recover v^-1");
  check(oracle::matches(h, oracle::inverse_of_t_plus_t2(M)), "v^-1 differs from the Catalan oracle");
  const SemiConjReport r2 = verify_semiconj({Fs.reduced(h.ring()), Gs.reduced(h.ring()), h, 0});
  check(r2.holds, "residual nonzero at " + show(r2.firstFailingDegree));

  const Ring R5 = RingSpec::make(5, 1, 8);
  oracle::Gen gen(10);
  for (int t = 0; t < 10; ++t) {
    const Series f = gen.series(R5, M, true);
    const DualIsogeny d = dual_isogeny(f, lit("5*T + T^5", R5, M));
    check(d.n == 0 && compose(d.fcheck, f) == Series::identity(R5, M), "fcheck o f != T");
  }
  return "Gamma_2 o R = R o [2]; v^-1 recovered from F = v^-1 o G o v; fcheck o f = T for 10 random f";
}

std::vector<oracle::Slope> to_oracle(const std::vector<SlopeMultiplicity>& prof) {
  std::vector<oracle::Slope> out;
  for (const auto& s : prof) out.push_back({mpq_class(s.slope.num, s.slope.den), s.multiplicity});
  return out;
}

bool same(const std::vector<oracle::Slope>& a, const std::vector<oracle::Slope>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].slope != b[i].slope || a[i].length != b[i].length) return false;
  return true;
}

std::string root_profiles() {
  const Ring R = RingSpec::make(3, 1, 8);
  const StableNoninvertible P = StableNoninvertible::make(binomial_minus_one(R, 3, 32));
  const std::vector<std::vector<oracle::Slope>> expected{
      {{mpq_class(-1, 2), 2}}, {{mpq_class(-1, 2), 2}, {mpq_class(-1, 6), 6}}};
  for (unsigned n = 1; n <= 2; ++n) {
    const auto got = to_oracle(root_valuation_profile(P, n));
    // ((1+T)^(3^n) - 1)/T: points (k, v_3(binom(3^n, k+1))).
    const unsigned long top = n == 1 ? 3 : 9;
    std::vector<std::pair<long, long>> pts;
    for (unsigned long k = 0; k < top; ++k) {
      mpz_class b;
      mpz_bin_uiui(b.get_mpz_t(), top, k + 1);
      pts.emplace_back(static_cast<long>(k), static_cast<long>(oracle::valuation(b, 3, 1000)));
    }
    auto hull = oracle::brute_force_hull(pts);
    std::vector<oracle::Slope> negative;
    for (const auto& s : hull)
      if (s.slope < 0) negative.push_back(s);
    check(same(got, negative), "n = " + std::to_string(n) + ": differs from brute-force hull");
    check(same(got, expected[n - 1]), "n = " + std::to_string(n) + ": differs from cyclotomic slopes");
  }
  return "(1+T)^3-1, M = 32: n=1 {(-1/2,2)}, n=2 {(-1/2,2),(-1/6,6)}, matching a brute-force hull";
}

std::string run_cli(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = cli::run(args, out, err);
  return out.str();
}

std::string determinism() {
  const auto dir = std::filesystem::temp_directory_path() / "padic_dynamics_acceptance";
  std::filesystem::create_directories(dir);
  const std::string datum = (dir / "cyclo.json").string();
  {
    std::ofstream o(datum);
    o << R"({"P": "(1+T)^3-1", "members": {"2": "(1+T)^2-1", "4": "(1+T)^4-1", "5": "(1+T)^5-1"},)"
      << R"( "table": {"2,2": "4"}})";
  }
  const std::vector<std::vector<std::string>> jobs{
      {"fg-build", "--p", "3", "--precN", "8", "--precT", "12", "--frob", "(1+T)^3-1"},
      {"fg-build", "--p", "3", "--f", "2", "--precN", "6", "--precT", "12", "--twist", "2",
       "--frob", "3*teich(x+1)*T + T^3"},
      {"fg-endo", "--p", "3", "--precN", "6", "--precT", "12", "--frob", "3*T+T^3", "--a", "2,4,5"},
      {"log", "--p", "3", "--precN", "5", "--precT", "16", "--P", "(1+T)^3-1"},
      {"commutant", "--p", "3", "--precN", "6", "--precT", "12", "--P", "(1+T)^3-1", "--c", "2"},
      {"normalize", "--p", "3", "--precN", "3", "--precT", "8", "--Q", "3+3*T+T^3"},
      {"seed-check", "--p", "3", "--precN", "6", "--precT", "8", "--P", "(1+T)^3-1", "--d", "3"},
      {"verify-lift", "--p", "3", "--precN", "6", "--precT", "12", "--datum", datum},
      {"condense", "--p", "3", "--precN", "8", "--precT", "16", "--frob", "(1+T)^3-1", "--W", "1,-1",
       "--a", "2,3,-2"},
      {"semiconj-verify", "--p", "3", "--precN", "6", "--precT", "12", "--F", "(1+T)^3-1", "--G",
       "(1+T)^3-1", "--h", "(1+T)^2-1"},
      {"semiconj-solve", "--p", "3", "--precN", "6", "--precT", "12", "--F", "(1+T)^3-1", "--G",
       "(1+T)^3-1", "--c", "2"},
      {"newton", "--p", "3", "--precN", "6", "--precT", "6", "--series", "3+2*T+T^3"},
      {"root-profile", "--p", "3", "--precN", "8", "--precT", "32", "--P", "(1+T)^3-1", "--n", "2"},
  };
  for (const auto& job : jobs) {
    std::vector<std::string> args{"padic-dynamics"};
    args.insert(args.end(), job.begin(), job.end());
    int c1 = -1, c2 = -1;
    const std::string a = run_cli(args, c1);
    const std::string b = run_cli(args, c2);
    check(c1 == 0 && c2 == 0, job[0] + " exited " + std::to_string(c1));
    check(!a.empty() && a == b, job[0] + " output differs between runs");
  }
  // Library level: independent constructions serialize identically.
  const Ring R = RingSpec::make(3, 2, 17);
  const Series f = lit("3*teich(x+1)*T + T^3", R, 12);
  const FormalGroup G1 = build_formal_group(FrobeniusSeries::make(f, 2), 12);
  const FormalGroup G2 = build_formal_group(FrobeniusSeries::make(f, 2), 12);
  check(formal_group_to_json(G1).dump() == formal_group_to_json(G2).dump(), "law differs");
  check(series_to_json(G1.endomorphism(Zq(R, 2L))).dump() ==
            series_to_json(G2.endomorphism(Zq(R, 2L))).dump(),
        "[2] differs");
  std::filesystem::remove_all(dir);
  return "all 12 subcommands and the library builders give byte-identical JSON on rerun";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<std::string()>>> checks{
      {"multiplicative formal group", multiplicative_oracle},
      {"twisted construction", twisted_construction},
      {"endomorphism ring laws", endomorphism_ring_laws},
      {"Lubin logarithm", lubin_logarithm},
      {"commutant uniqueness and linearization", commutant_uniqueness},
      {"fixed-point normalization", fixed_point_normalization},
      {"condensation", condensation},
      {"derivative determines the condensed series", derivative_determines_series},
      {"lift-datum verification", lift_datum},
      {"semi-conjugacy", semi_conjugacy},
      {"root-valuation profiles", root_profiles},
      {"determinism", determinism},
  };
  int failed = 0;
  int index = 0;
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& [name, fn] : checks) {
    ++index;
    std::string detail;
    bool ok = false;
    try {
      detail = fn();
      ok = true;
    } catch (const Failure& f) {
      detail = f.why;
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("%s %2d %s: %s\n", ok ? "PASS" : "FAIL", index, name, detail.c_str());
    if (!ok) ++failed;
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%d/%d passed in %.1f s\n", index - failed, index, secs);
  return failed ? 1 : 0;
}
