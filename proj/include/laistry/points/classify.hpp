#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "laistry/errors.hpp"
#include "laistry/pbw/identities.hpp"
#include "laistry/points/verify.hpp"
#include "laistry/report.hpp"
#include "laistry/scalars/polysystem.hpp"

namespace laistry {

// Affine charts of P^2: A = (1 : b : c), B = (0 : 1 : c), C = (0 : 0 : 1).
enum class Chart { A, B, C };

inline char chart_letter(Chart c) { return c == Chart::A ? 'A' : c == Chart::B ? 'B' : 'C'; }

// The P0 coordinates of one surviving branch, in terms of its free variables.
struct P0Family {
  Chart chart = Chart::C;
  MultiPoly b0, c0;
  std::vector<std::string> pending;

  std::string to_string() const {
    switch (chart) {
      case Chart::A: return "(1:" + b0.to_string() + ":" + c0.to_string() + ")";
      case Chart::B: return "(0:1:" + c0.to_string() + ")";
      case Chart::C: return "(0:0:1)";
    }
    return {};
  }
};

struct ClassifyOptions {
  bool allow_small_roots_of_unity = false;  // run anyway and report
  bool allow_shallow = false;               // permit depth < G + 3
};

struct ClassifyResult {
  std::vector<P0Family> families;
  std::size_t leaves = 0;
  std::size_t dead_branches = 0;
  bool matches_variety = false;  // families cover exactly V(X0 X2)
  Report guards;
};

namespace detail {

inline std::string seq_var(char kind, std::size_t i) { return std::string(1, kind) + std::to_string(i); }

inline SequenceScalars<MultiPoly> chart_scalars(const std::vector<Chart>& charts, const FieldElem& q) {
  SequenceScalars<MultiPoly> s{{}, {}, {}, q};
  for (std::size_t i = 0; i < charts.size(); ++i) {
    switch (charts[i]) {
      case Chart::A:
        s.a.emplace_back(FieldElem(1));
        s.b.push_back(MultiPoly::variable(seq_var('b', i)));
        s.c.push_back(MultiPoly::variable(seq_var('c', i)));
        break;
      case Chart::B:
        s.a.emplace_back();
        s.b.emplace_back(FieldElem(1));
        s.c.push_back(MultiPoly::variable(seq_var('c', i)));
        break;
      case Chart::C:
        s.a.emplace_back();
        s.b.emplace_back();
        s.c.emplace_back(FieldElem(1));
        break;
    }
  }
  return s;
}

inline bool has_variable(const MultiPoly& p) { return !p.variables().empty(); }

}  // namespace detail

// Every P0 that extends to a sequence P_0..P_D satisfying all relations within
// the window. Each P_i is placed in one of the three charts; the relations
// become polynomial equations in the chart coordinates, solved by case
// splitting as the sequence grows.
inline ClassifyResult classify_truncated(const AlgebraParams& params, unsigned depth, ClassifyOptions opt = {}) {
  params.validate();
  const unsigned G = params.ghost;
  if (depth < G + 3 && !opt.allow_shallow) throw InvalidSpec("depth must be at least G + 3");
  if (params.q.is_root_of_unity_up_to(depth) && !opt.allow_small_roots_of_unity)
    throw Unsupported("q is a root of unity of order at most the depth; classification is not asserted there");
  const FieldElem q = FieldElem::q(params.q);
  ClassifyResult res;
  res.guards.suite = "guards";
  res.guards.add("2 != 0", !FieldElem(params.q, 2).is_zero());
  FieldElem fact(params.q, 1);
  for (unsigned k = 2; k <= G + 1; ++k) fact *= FieldElem(params.q, static_cast<long>(k));
  res.guards.add("(G+1)! != 0", !fact.is_zero());

  auto rank = [](const std::string& v) -> long { return 2 * std::stol(v.substr(1)) + (v[0] == 'c' ? 1 : 0); };
  const PolySystemSolver solver(rank);

  auto key_set = [&](const std::vector<Chart>& charts) {
    std::set<std::pair<std::string, std::size_t>> keys;
    if (charts.size() < 2) return keys;
    for (const auto& eq : scalar_equations(detail::chart_scalars(charts, q), G)) keys.emplace(eq.relation, eq.index);
    return keys;
  };

  std::set<std::string> seen;
  std::vector<std::pair<SolverBranch, std::vector<Chart>>> stack;
  for (Chart c : {Chart::C, Chart::B, Chart::A}) stack.push_back({SolverBranch{}, {c}});
  while (!stack.empty()) {
    auto [branch, charts] = std::move(stack.back());
    stack.pop_back();
    if (charts.size() == depth + 1) {
      ++res.leaves;
      P0Family f;
      f.chart = charts[0];
      if (f.chart == Chart::A) f.b0 = branch.value_of("b0");
      if (f.chart != Chart::C) f.c0 = branch.value_of("c0");
      for (const auto& c : branch.pending) f.pending.push_back(c.origin + ": " + c.poly.to_string());
      const std::string key = std::string(1, chart_letter(f.chart)) + f.to_string() + (f.pending.empty() ? "" : "*");
      if (seen.insert(key).second) res.families.push_back(std::move(f));
      continue;
    }
    const auto old_keys = key_set(charts);
    for (Chart c : {Chart::C, Chart::B, Chart::A}) {
      std::vector<Chart> next = charts;
      next.push_back(c);
      std::vector<Constraint> fresh;
      for (auto& eq : scalar_equations(detail::chart_scalars(next, q), G))
        if (!old_keys.count({eq.relation, eq.index}))
          fresh.push_back({std::move(eq.value), eq.relation + " @ v" + std::to_string(eq.index)});
      const SolveOutcome out = solver.extend(branch, fresh);
      res.dead_branches += out.contradictions.size();
      for (const auto& b : out.branches) stack.push_back({b, next});
    }
  }

  bool a_line = false, b_line = false, c_point = false, a_on_variety = true, clean = true;
  for (const auto& f : res.families) {
    clean = clean && f.pending.empty();
    switch (f.chart) {
      case Chart::A:
        a_on_variety = a_on_variety && f.c0.is_zero();
        a_line = a_line || (f.c0.is_zero() && detail::has_variable(f.b0));
        break;
      case Chart::B: b_line = b_line || detail::has_variable(f.c0); break;
      case Chart::C: c_point = true; break;
    }
  }
  res.matches_variety = clean && a_line && b_line && c_point && a_on_variety;
  return res;
}

// In chart A the relations force a_i = 1, b_i = b0 - i/2, c_i = q^-i c0. On
// such a sequence the vanishing binomial combination acting on v0 is
//   sum_i C(G+1,i) (-q)^i b_0..b_{i-1} b_{i+1}..b_{G+1} c_i = K c0,
// K = (-1)^(G+1) (G+1)! / 2^(G+1), which equals
// 2 b c0 (-1)^(G+1) (G+1)! / (2b0 (2b0 - 1) ... (2b0 - G - 1)) with b = prod b_i.
inline Report chart_a_obstruction(const AlgebraParams& params) {
  params.validate();
  const unsigned G = params.ghost;
  const FieldElem q = FieldElem::q(params.q);
  const MultiPoly b0 = MultiPoly::variable("b0"), c0 = MultiPoly::variable("c0");
  SequenceScalars<MultiPoly> s{{}, {}, {}, q};
  for (unsigned i = 0; i <= G + 1; ++i) {
    s.a.emplace_back(FieldElem(1));
    s.b.push_back(b0 - MultiPoly(FieldElem(mpq_class(i, 2))));
    s.c.push_back(c0.scaled(q.inverse().pow(i)));
  }
  Report r;
  r.suite = "chart A obstruction G=" + std::to_string(G);
  const NCPoly vanishing = z_via_x2_z0(q, G + 1);
  const MultiPoly lhs = act_on_v(vanishing, 0, s);

  MultiPoly printed;
  for (unsigned i = 0; i <= G + 1; ++i) {
    MultiPoly term(binomial(G + 1, i) * (-q).pow(i));
    for (unsigned h = 0; h <= G + 1; ++h)
      if (h != i) term = term * s.b[h];
    printed += term * s.c[i];
  }
  r.add("expansion on v0 equals the binomial sum", lhs == printed);

  FieldElem fact(1);
  for (unsigned k = 2; k <= G + 1; ++k) fact *= FieldElem(static_cast<long>(k));
  const FieldElem sign((G + 1) % 2 == 0 ? 1 : -1);
  const FieldElem K = sign * fact / FieldElem(2).pow(G + 1);
  r.add("value is K * c0", lhs == c0.scaled(K), "K = " + K.to_string());
  r.add("K != 0", !K.is_zero());

  MultiPoly bprod(FieldElem(1)), denom(FieldElem(1));
  for (unsigned h = 0; h <= G + 1; ++h) {
    bprod = bprod * s.b[h];
    denom = denom * (b0.scaled(FieldElem(2)) - MultiPoly(FieldElem(static_cast<long>(h))));
  }
  r.add("cleared partial-fraction form", lhs * denom == (bprod * c0).scaled(FieldElem(2) * sign * fact));
  return r;
}

}  // namespace laistry
