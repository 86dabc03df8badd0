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

#include "padic/condense.hpp"

#include <algorithm>

namespace padic {

CondensationSetup norm_series(const FormalGroup& G, const std::vector<Zq>& W) {
  if (W.empty()) fail(ErrorKind::NotAGroup, "W is empty");
  const Ring& work = G.frob().series().ring();
  const unsigned d = static_cast<unsigned>(W.size());
  if (d % work->p() == 0)
    fail(ErrorKind::OrderNotPrimeToP,
         "|W| = " + std::to_string(d) + " is divisible by p = " + std::to_string(work->p()));

  CondensationSetup s{G, {}, d, {}, {}};
  for (const Zq& w : W) {
    if (!w.ring()->same_field(*work)) fail(ErrorKind::SpecMismatch, "W element from another ring");
    if (w.pow(static_cast<unsigned long>(d)) != Zq::one(w.ring()))
      fail(ErrorKind::NotAGroup, w.to_string() + "^" + std::to_string(d) + " != 1");
    s.W.push_back(Zq::teichmuller(work, w.residue()));
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (s.W[i] == s.W[j]) fail(ErrorKind::NotAGroup, "W repeats " + W[i].to_string());
  for (const Zq& x : s.W)
    for (const Zq& y : s.W)
      if (std::find(s.W.begin(), s.W.end(), x * y) == s.W.end())
        fail(ErrorKind::NotAGroup, "W is not closed under multiplication");

  const Ring stamped = G.law().ring();
  Series R = Series::identity(stamped, G.precD());
  Zq lead = Zq::one(work);
  bool first = true;
  for (const Zq& w : s.W) {
    const Series e = G.endomorphism(w);
    R = first ? e : R * e;
    first = false;
    lead *= w;
  }
  s.leading = lead.reduced(stamped);
  const auto wd = weierstrass_degree(R);
  if (!wd || *wd != d || R[d] != s.leading)
    fail(ErrorKind::PrecisionExhausted, "norm series lost its leading term T^" + std::to_string(d));
  s.R = std::move(R);
  return s;
}

Series condense(const CondensationSetup& setup, const Zq& a) {
  const Series& R = setup.R;
  const unsigned d = setup.d;
  Series residual = compose(R, setup.G.endomorphism(a));
  const unsigned M = residual.precT();
  const Ring& ring = residual.ring();
  const unsigned outT = M / d;
  const Zq lead_inv = setup.leading.reduced(ring).inverse();

  auto check_block = [&](unsigned from, unsigned to) {
    for (unsigned k = from; k < std::min(to, M); ++k)
      if (!residual[k].is_zero())
        fail(ErrorKind::NotInSubring,
             "R o [" + a.to_string() + "] has a stray coefficient at T^" + std::to_string(k));
  };
  check_block(0, d);

  std::vector<Zq> gamma(outT, Zq::zero(ring));
  Series Rk = Series::constant(Zq::one(ring), M);
  Zq lead_inv_k = Zq::one(ring);
  for (unsigned k = 1; k < outT; ++k) {
    Rk = Rk * R;
    lead_inv_k *= lead_inv;
    gamma[k] = residual[k * d] * lead_inv_k;
    residual = residual - Rk.scaled(gamma[k]);
    check_block(k * d, (k + 1) * d);
  }
  // Degrees from outT * d to M - 1 are not matched by any kept coefficient.
  return Series(ring, std::move(gamma));
}

bool CondensationReport::all() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.holds; });
}

CondensationReport verify_condensation_laws(const CondensationSetup& setup,
                                            const std::vector<Zq>& samples) {
  CondensationReport rep;
  std::vector<Series> gammas;
  for (const Zq& a : samples) gammas.push_back(condense(setup, a));

  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Series& g = gammas[i];
    const Zq expected = samples[i].pow(static_cast<unsigned long>(setup.d));
    CondensationCheck c{"derivative", samples[i].to_string(), false, std::nullopt};
    if (g.precT() > 1 && g[1] == Zq(g.ring(), expected.coords()))
      c.holds = true;
    else
      c.firstFailingDegree = 1;
    rep.checks.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < samples.size(); ++i)
    for (std::size_t j = 0; j < samples.size(); ++j) {
      const Series lhs = compose(gammas[i], gammas[j]);
      const Series rhs = condense(setup, samples[i] * samples[j]);
      CondensationCheck c{"composition", samples[i].to_string() + "," + samples[j].to_string(),
                          false, first_difference(lhs, rhs)};
      c.holds = !c.firstFailingDegree;
      rep.checks.push_back(std::move(c));
    }
  for (std::size_t i = 0; i < samples.size(); ++i)
    for (std::size_t j = i + 1; j < samples.size(); ++j) {
      const unsigned long d = setup.d;
      if (samples[i].pow(d) != samples[j].pow(d)) continue;
      CondensationCheck c{"rigidity", samples[i].to_string() + "," + samples[j].to_string(), false,
                          first_difference(gammas[i], gammas[j])};
      c.holds = !c.firstFailingDegree;
      rep.checks.push_back(std::move(c));
    }
  return rep;
}

}  // namespace padic
