#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "laistry/laistry.hpp"

namespace laistry {

inline FieldElem random_nonzero_rational(std::mt19937_64& rng, const QSpec& spec, long max_num = 30, long max_den = 7) {
  std::uniform_int_distribution<long> num(1, max_num), den(1, max_den), sign(0, 1);
  mpq_class v(num(rng) * (sign(rng) ? 1 : -1), den(rng));
  v.canonicalize();
  return FieldElem(spec, v);
}

// A rational q other than 0, 1 and -1.
inline QSpec random_numeric_q(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(2, 40), den(1, 9), sign(0, 1);
  for (;;) {
    mpq_class v(num(rng) * (sign(rng) ? 1 : -1), den(rng));
    v.canonicalize();
    if (v != 1 && v != -1) return QSpec::numeric(v);
  }
}

// Coefficients of 1 / ((1-t)^2 prod_{n=0..G} (1 - t^(n+1))) up to t^D.
inline std::vector<std::uint64_t> product_series(unsigned ghost, unsigned max_degree) {
  std::vector<std::uint64_t> c(max_degree + 1, 0);
  c[0] = 1;
  std::vector<unsigned> steps{1, 1};
  for (unsigned n = 0; n <= ghost; ++n) steps.push_back(n + 1);
  for (unsigned k : steps)
    for (unsigned d = k; d <= max_degree; ++d) c[d] += c[d - k];
  return c;
}

inline Report hilbert_report(unsigned ghost, unsigned max_degree) {
  Report r;
  r.suite = "hilbert";
  const auto got = hilbert_coeffs(ghost, max_degree), want = product_series(ghost, max_degree);
  for (unsigned d = 0; d <= max_degree; ++d)
    r.add("degree " + std::to_string(d), got[d] == want[d],
          got[d] == want[d] ? "" : std::to_string(got[d]) + " != " + std::to_string(want[d]));
  return r;
}

// Laistrygonian braiding at q satisfies the braid equation, and the twist with
// p12 = q'/q carries it to the one at q'.
inline Report braiding_report(const AlgebraParams& p, const FieldElem& q_target) {
  Report r;
  r.suite = "braiding";
  const FieldElem q = FieldElem::q(p.q);
  const BraidingParams b = BraidingParams::laistrygonian(q, p.ghost);
  r.add("braid equation at q", braid_equation_check(b));
  const BraidingParams t = twist_braiding(b, TwistParams{q_target / q, q.one_like()});
  r.add("twist by q'/q reaches q' = " + q_target.to_string(), t == BraidingParams::laistrygonian(q_target, p.ghost));
  r.add("braid equation at q'", braid_equation_check(t));
  return r;
}

// The character families against the one-dimensional modules pulled back from
// the quantum plane: for q != 1 exactly the lines through CharX and CharY, for
// q = 1 one plane with free beta and gamma0.
inline Report characters_report(const AlgebraParams& p, std::uint64_t seed) {
  Report r;
  r.suite = "characters";
  std::mt19937_64 rng(seed);
  for (const auto& c : solve_characters(p)) {
    const std::string tag = "[" + c.label + "] ";
    r.add(tag + "all equations resolved", c.unresolved.empty(), c.unresolved.empty() ? "" : c.unresolved.front());
    bool alpha_zero = true;
    for (const auto& f : c.families) alpha_zero = alpha_zero && f.values.count("alpha") && f.values.at("alpha").is_zero();
    r.add(tag + "alpha = 0 on every family", alpha_zero);
    if (c.label == "q = 1") {
      const bool plane = c.families.size() == 1 && c.families[0].free == std::vector<std::string>{"beta", "gamma0"};
      r.add(tag + "one family with free beta, gamma0", plane);
      continue;
    }
    r.add(tag + "two families", c.families.size() == 2, std::to_string(c.families.size()));
    if (c.spec.is_generic()) continue;
    for (const auto& f : c.families) {
      const bool line = f.free.size() == 1 && (f.free[0] == "beta" || f.free[0] == "gamma0");
      r.add(tag + "family is a line in beta or gamma0", line);
      if (!line) continue;
      const FieldElem a = random_nonzero_rational(rng, c.spec);
      const QPModuleSpec ms = f.free[0] == "beta" ? QPModuleSpec::char_x(a) : QPModuleSpec::char_y(a);
      r.add(tag + "family " + f.free[0] + " contains " + ms.name(),
            f.contains(Character::of(pullback(build_qp_module(ms, c.spec), p.ghost))));
    }
  }
  return r;
}

// Pullbacks of the cyclic quantum-plane modules U_{a,b} at q of order N are
// representations and are simple. Needs q of finite order N >= 2.
inline Report simples_report(const AlgebraParams& p, std::uint64_t seed, unsigned draws = 10) {
  Report r;
  r.suite = "simples";
  const unsigned N = order_of_q(p.q);
  if (N < 2) throw InvalidSpec("cyclic modules need q of finite order at least 2");
  std::mt19937_64 rng(seed);
  for (unsigned t = 0; t < draws; ++t) {
    const auto ms = QPModuleSpec::cyclic(random_nonzero_rational(rng, p.q), random_nonzero_rational(rng, p.q), N);
    const MatrixRep rep = pullback(build_qp_module(ms, p.q), p.ghost);
    const Report rc = rep_check(rep);
    r.add(ms.name() + " relations", rc.passed(), rc.passed() ? "" : rc.first_failure()->name);
    r.add(ms.name() + " simple", is_simple(rep));
  }
  return r;
}

// Round trips through propagate and verify_truncated on all three branches,
// the trichotomy on a_i, and the chart-A obstruction.
inline Report points_report(const AlgebraParams& p, std::uint64_t seed, unsigned draws = 10) {
  Report r;
  r.suite = "points";
  const unsigned G = p.ghost, D = G + 4;
  std::mt19937_64 rng(seed);
  for (unsigned t = 0; t < draws; ++t) {
    const FieldElem x = random_nonzero_rational(rng, p.q);
    const std::vector<ProjPoint> starts{ProjPoint(FieldElem(1), x, FieldElem(0)), ProjPoint(FieldElem(0), FieldElem(1), x),
                                        ProjPoint(FieldElem(0), FieldElem(0), FieldElem(1))};
    for (const auto& p0 : starts) {
      const PointSequence s = propagate(p0, p, D);
      const Report v = verify_truncated(s);
      r.add("round trip " + p0.to_string(), v.passed(), v.passed() ? "" : v.first_failure()->name);
      bool some = false, all = true;
      for (const auto& pt : s.pts) {
        some = some || pt.a().is_zero();
        all = all && pt.a().is_zero();
      }
      r.add("a_0 = 0 iff some a_i = 0 iff all a_i = 0 on " + p0.to_string(),
            s.pts[0].a().is_zero() == some && some == all);
    }
  }
  r.append(chart_a_obstruction(p));
  return r;
}

// A point (1 : b0 : c0) with c0 != 0 has no extension already within P_0..P_{G+1}:
// the forced continuation breaks x2_zG on v0, and classifying that short window
// leaves only c0 = 0 in chart A.
inline Report chart_a_rejection_report(const AlgebraParams& p, const FieldElem& b0, const FieldElem& c0) {
  Report r;
  r.suite = "chart A rejection";
  const unsigned G = p.ghost;
  const FieldElem q = FieldElem::q(p.q);
  SequenceScalars<FieldElem> s{{}, {}, {}, q};
  for (unsigned i = 0; i <= G + 1; ++i) {
    s.a.push_back(q.one_like());
    s.b.push_back(b0 - FieldElem(mpq_class(i, 2)));
    s.c.push_back(c0 * q.inverse().pow(i));
  }
  bool found = false, others_hold = true;
  for (const auto& eq : scalar_equations(s, G)) {
    if (eq.relation == "x2_zG" && eq.index == 0) found = !eq.value.is_zero();
    else others_hold = others_hold && eq.value.is_zero();
  }
  r.add("x2_zG @ v0 fails within G+2 points", found);
  r.add("all other relations hold there", others_hold);
  ClassifyOptions opt;
  opt.allow_shallow = true;
  opt.allow_small_roots_of_unity = true;
  bool a_on_line = true;
  for (const auto& f : classify_truncated(p, G + 1, opt).families)
    if (f.chart == Chart::A) a_on_line = a_on_line && f.c0.is_zero();
  r.add("classification of P_0..P_{G+1} forces c0 = 0 in chart A", a_on_line);
  return r;
}

inline Report classify_report(const AlgebraParams& p, unsigned depth) {
  Report r;
  r.suite = "classify";
  const ClassifyResult res = classify_truncated(p, depth);
  r.append(res.guards);
  std::string pending;
  for (const auto& f : res.families)
    if (!f.pending.empty() && pending.empty()) pending = f.pending.front();
  r.add("every branch resolved", pending.empty(), pending);
  r.add("P0 families cover exactly X0 X2 = 0", res.matches_variety);
  return r;
}

inline Report system_report(const AlgebraParams& p, std::uint64_t seed) {
  Report r;
  r.suite = "system";
  const unsigned g = p.ghost;
  r.append(system_check(g, g + 4, SystemMode::ClosedForm, seed, 1, p.q));
  if (g <= 2) r.append(system_check(g, g == 1 ? 5 : 8, SystemMode::NumericUniqueness, seed, 3));
  r.append(elimination_identities(g, p.q));
  return r;
}

struct Suite {
  std::string name;
  std::function<Report()> run;
};

struct BatteryOptions {
  std::uint64_t seed = 1;
  Perturbation perturbation = Perturbation::None;
  unsigned confluence_degree = 4;
  unsigned identity_jmax = 5;
  unsigned hilbert_degree = 15;
};

// Every check that applies to the given G and q, as independent suites.
inline std::vector<Suite> battery(const AlgebraParams& p, const BatteryOptions& o = {}) {
  std::vector<Suite> out;
  const EngineOptions eo{o.perturbation};
  out.push_back({"confluence", [=] { return confluence_check(Engine(p, eo), o.confluence_degree); }});
  out.push_back({"identities", [=] { return verify_derived_identities(Engine(p, eo), o.identity_jmax); }});
  out.push_back({"hilbert", [=] { return hilbert_report(p.ghost, o.hilbert_degree); }});
  out.push_back({"ore", [=] { return ore_verify_all(Engine(p, eo)); }});
  out.push_back({"braiding", [=] {
                   const FieldElem q = FieldElem::q(p.q);
                   return braiding_report(p, q * q);
                 }});
  out.push_back({"characters", [=] { return characters_report(p, o.seed); }});
  if (order_of_q(p.q) >= 2) out.push_back({"simples", [=] { return simples_report(p, o.seed); }});
  out.push_back({"points", [=] { return points_report(p, o.seed); }});
  out.push_back({"chart A rejection", [=] {
                   std::mt19937_64 rng(o.seed);
                   const FieldElem b0 = random_nonzero_rational(rng, p.q), c0 = random_nonzero_rational(rng, p.q);
                   return chart_a_rejection_report(p, b0, c0);
                 }});
  if (!p.q.is_root_of_unity_up_to(p.ghost + 4))
    out.push_back({"classify", [=] { return classify_report(p, p.ghost + 4); }});
  out.push_back({"system", [=] { return system_report(p, o.seed); }});
  out.push_back({"partial fractions", [] {
                   Report r;
                   r.suite = "partial fractions";
                   for (unsigned n = 1; n <= 8; ++n) r.add("n = " + std::to_string(n), partial_fraction_identity(n));
                   return r;
                 }});
  return out;
}

}  // namespace laistry
