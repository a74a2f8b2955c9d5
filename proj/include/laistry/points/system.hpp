#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "laistry/errors.hpp"
#include "laistry/report.hpp"
#include "laistry/scalars/multipoly.hpp"
#include "laistry/scalars/polysystem.hpp"

namespace laistry {

// Levels of a lambda sequence: level[0][j] = lambda_j and
// level[n+1][j] = level[n][j] - q level[n][j+1], for j + n <= J.
inline std::vector<std::vector<MultiPoly>> lambda_levels(const std::vector<MultiPoly>& base, unsigned max_level,
                                                         const FieldElem& q) {
  std::vector<std::vector<MultiPoly>> lv{base};
  for (unsigned n = 1; n <= max_level && n < base.size(); ++n) {
    std::vector<MultiPoly> row;
    for (std::size_t j = 0; j + 1 < lv.back().size(); ++j) row.push_back(lv.back()[j] - lv.back()[j + 1].scaled(q));
    lv.push_back(std::move(row));
  }
  return lv;
}

struct SystemEquation {
  std::string name;
  MultiPoly poly;
};

// The system S_g truncated to lambda_0..lambda_J:
//   lin(j):    lambda_j^(g) - q lambda_{j+1}^(g)
//   quad(n,j): lambda_j^(n) lambda_{j+n+1}^(n+1) - q lambda_j^(n+1) lambda_{j+n+2}^(n),  n < g
inline std::vector<SystemEquation> truncated_system(const std::vector<MultiPoly>& lambda, unsigned g, const FieldElem& q) {
  const std::size_t J = lambda.size() - 1;
  const auto lv = lambda_levels(lambda, g, q);
  std::vector<SystemEquation> out;
  for (std::size_t j = 0; j + g + 1 <= J; ++j)
    out.push_back({"lin(" + std::to_string(j) + ")", lv[g][j] - lv[g][j + 1].scaled(q)});
  for (unsigned n = 0; n < g; ++n)
    for (std::size_t j = 0; j + 2 * n + 2 <= J; ++j)
      out.push_back({"quad(" + std::to_string(n) + "," + std::to_string(j) + ")",
                     lv[n][j] * lv[n + 1][j + n + 1] - (lv[n + 1][j] * lv[n][j + n + 2]).scaled(q)});
  return out;
}

inline std::vector<MultiPoly> lambda_variables(std::size_t J) {
  std::vector<MultiPoly> v;
  for (std::size_t j = 0; j <= J; ++j) v.push_back(MultiPoly::variable("l" + std::to_string(j)));
  return v;
}

enum class SystemMode { ClosedForm, NumericUniqueness };

// ClosedForm: lambda_j = q^-j x solves every equation identically in x (and q).
// NumericUniqueness: for random rational q and lambda_0, every solution of the
// truncated system has lambda_j = q^-j lambda_0 for all j <= J.
// Use enforce<SystemFailure>() on the result to raise on failure.
inline Report system_check(unsigned g, unsigned J, SystemMode mode, std::uint64_t seed = 1, unsigned trials = 5,
                           const QSpec& spec = QSpec::generic()) {
  if (g < 1) throw InvalidSpec("g must be positive");
  if (J < g + 3) throw InvalidSpec("J must be at least g + 3");
  Report r;
  if (mode == SystemMode::ClosedForm) {
    r.suite = "system S_" + std::to_string(g) + " closed form";
    const FieldElem q = FieldElem::q(spec);
    std::vector<MultiPoly> lam;
    for (unsigned j = 0; j <= J; ++j) lam.push_back(MultiPoly::variable("x").scaled(q.inverse().pow(j)));
    for (const auto& eq : truncated_system(lam, g, q))
      r.add(eq.name, eq.poly.is_zero(), eq.poly.is_zero() ? "" : eq.poly.to_string());
    return r;
  }
  r.suite = "system S_" + std::to_string(g) + " uniqueness";
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(2, 40), den(1, 9), sign(0, 1);
  for (unsigned t = 0; t < trials; ++t) {
    mpq_class qv(num(rng) * (sign(rng) ? 1 : -1), den(rng));
    qv.canonicalize();
    const QSpec s = QSpec::numeric(qv);
    const FieldElem q = FieldElem::q(s);
    const FieldElem l0(s, mpq_class(num(rng) * (sign(rng) ? 1 : -1), den(rng)));
    std::vector<MultiPoly> lam = lambda_variables(J);
    lam[0] = MultiPoly(l0);
    std::vector<Constraint> cons;
    for (auto& eq : truncated_system(lam, g, q)) cons.push_back({std::move(eq.poly), eq.name});
    auto rank = [](const std::string& v) -> long { return std::stol(v.substr(1)); };
    const SolveOutcome out = PolySystemSolver(rank).solve(cons);
    const std::string tag = "q=" + qv.get_str() + " lambda0=" + l0.to_string();
    bool ok = !out.branches.empty();
    std::string detail;
    for (const auto& b : out.branches) {
      if (!b.clean()) {
        ok = false;
        detail = "unresolved " + b.pending.front().origin;
      }
      for (unsigned j = 1; j <= J; ++j) {
        const MultiPoly v = b.value_of("l" + std::to_string(j));
        if (v != MultiPoly(l0 * q.inverse().pow(j))) {
          ok = false;
          if (detail.empty()) detail = "lambda" + std::to_string(j) + " = " + v.to_string();
        }
      }
    }
    r.add(tag, ok, detail);
  }
  return r;
}

// Algebraic steps of the uniqueness argument, as exact polynomial identities
// (u = lambda_j^(g), w = lambda_{j+1}^(g) in (iii) and (iv)).
inline Report elimination_identities(unsigned g, const QSpec& spec = QSpec::generic()) {
  if (g < 1) throw InvalidSpec("g must be positive");
  const FieldElem q = FieldElem::q(spec), qi = q.inverse(), two(2);
  Report r;
  r.suite = "elimination g=" + std::to_string(g);
  const auto lam = lambda_variables(2);
  const MultiPoly &l0 = lam[0], &l1 = lam[1], &l2 = lam[2];
  const auto sys = truncated_system(lam, 1, q);
  const MultiPoly &lin = sys[0].poly, &quad = sys[1].poly;
  r.add("S_1 linear equation", lin == l0 - l1.scaled(two * q) + l2.scaled(q * q));
  r.add("S_1 quadratic equation", quad == l0 * l1 - (l0 * l2).scaled(two * q) + (l1 * l2).scaled(q * q));

  // (i)
  r.add("(i) quad - lambda_{j+1} lin", quad - l1 * lin == (l1 * l1 - l0 * l2).scaled(two * q));
  // (ii)
  const MultiPoly l2_sub = (l0 - l1.scaled(two * q)).scaled(-qi * qi);
  const MultiPoly sq = (l1 * l1 - l0 * l2).substitute("l2", l2_sub);
  const MultiPoly root = l1 - l0.scaled(qi);
  r.add("(ii) perfect square", sq == root * root);

  // (iii): u_{j+h} = h q^(1-h) w - (h-1) q^-h u satisfies u_{j+h+2} = 2q^-1 u_{j+h+1} - q^-2 u_{j+h}.
  const MultiPoly u = MultiPoly::variable("u"), w = MultiPoly::variable("w");
  auto closed = [&](unsigned h) {
    return w.scaled(FieldElem(static_cast<long>(h)) * q.pow(1 - static_cast<long>(h))) -
           u.scaled(FieldElem(static_cast<long>(h) - 1) * qi.pow(h));
  };
  std::vector<MultiPoly> it{u, w};
  bool rec_ok = true;
  for (unsigned h = 2; h <= 6; ++h) {
    it.push_back(it[h - 1].scaled(two * qi) - it[h - 2].scaled(qi * qi));
    rec_ok = rec_ok && it[h] == closed(h);
  }
  r.add("(iii) closed form h <= 6", rec_ok && closed(0) == u && closed(1) == w);
  r.add("(iii) h = 2", closed(2) == w.scaled(two * qi) - u.scaled(qi * qi));

  // (iv): the top quadratic of S_{g+1} after substituting (iii).
  const long G = static_cast<long>(g);
  const MultiPoly top = u * closed(g + 1) - (u * closed(g + 2)).scaled(two * q) + (w * closed(g + 2)).scaled(q * q);
  const MultiPoly expected = (u * u).scaled(q.pow(-G - 1)) - (u * w).scaled(two * q.pow(-G)) + (w * w).scaled(q.pow(1 - G));
  r.add("(iv) reduces to (g+2) times the displayed quadratic", top == expected.scaled(FieldElem(G + 2)));
  const MultiPoly diff = u - w.scaled(q);
  r.add("(iv) displayed quadratic is q^(-g-1) (u - q w)^2", expected == (diff * diff).scaled(q.pow(-G - 1)));
  return r;
}

}  // namespace laistry
