#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "laistry/errors.hpp"
#include "laistry/scalars/multipoly.hpp"

namespace laistry {

// A polynomial that must vanish, tagged with where it came from.
struct Constraint {
  MultiPoly poly;
  std::string origin;
};

// One branch of the solution set: variables fixed by `assignment` (whose
// values only mention free variables) plus residual equations the solver
// could neither use nor split.
struct SolverBranch {
  std::map<std::string, MultiPoly> assignment;
  std::vector<Constraint> pending;
  std::vector<std::string> history;  // "v := value" steps and split choices

  bool clean() const { return pending.empty(); }

  MultiPoly value_of(const std::string& var) const {
    auto it = assignment.find(var);
    return it == assignment.end() ? MultiPoly::variable(var) : it->second;
  }

  bool is_zero(const std::string& var) const {
    auto it = assignment.find(var);
    return it != assignment.end() && it->second.is_zero();
  }
};

struct SolveOutcome {
  std::vector<SolverBranch> branches;      // consistent leaves
  std::vector<std::string> contradictions; // origin of the constraint that killed each dead branch
};

// Case-splitting solver for systems of commutative polynomial equations of
// the shapes that occur here: it substitutes forced values K*(v - r)^e = 0,
// splits on monomial factors (v*w*f = 0 gives v = 0 | w = 0 | f = 0) and
// leaves anything else pending.
class PolySystemSolver {
 public:
  using Rank = std::function<long(const std::string&)>;

  explicit PolySystemSolver(Rank rank = {}, std::size_t branch_budget = 100000)
      : rank_(std::move(rank)), budget_(branch_budget) {}

  SolveOutcome solve(const std::vector<Constraint>& constraints) const {
    return extend(SolverBranch{}, constraints);
  }

  // Continues an existing branch with additional equations.
  SolveOutcome extend(const SolverBranch& start, const std::vector<Constraint>& more) const {
    SolveOutcome out;
    std::size_t spent = 0;
    std::vector<std::pair<SolverBranch, std::vector<Constraint>>> stack;
    std::vector<Constraint> work = start.pending;
    work.insert(work.end(), more.begin(), more.end());
    SolverBranch root = start;
    root.pending.clear();
    stack.emplace_back(std::move(root), std::move(work));
    while (!stack.empty()) {
      auto [branch, eqs] = std::move(stack.back());
      stack.pop_back();
      if (++spent > budget_) throw BudgetExceeded("polynomial system solver exceeded its branch budget");
      run(std::move(branch), std::move(eqs), stack, out);
    }
    return out;
  }

 private:
  using Stack = std::vector<std::pair<SolverBranch, std::vector<Constraint>>>;

  long rank(const std::string& v) const { return rank_ ? rank_(v) : 0; }

  // Returns false if the branch died.
  bool simplify(SolverBranch& b, std::vector<Constraint>& eqs, SolveOutcome& out) const {
    std::vector<Constraint> kept;
    kept.reserve(eqs.size());
    for (auto& c : eqs) {
      MultiPoly p = b.assignment.empty() ? std::move(c.poly) : c.poly.substitute(b.assignment);
      if (p.is_zero()) continue;
      if (p.is_constant()) {
        out.contradictions.push_back(c.origin);
        return false;
      }
      kept.push_back({std::move(p), std::move(c.origin)});
    }
    eqs = std::move(kept);
    return true;
  }

  struct Elimination {
    std::size_t index;
    std::string var;
    MultiPoly value;
    unsigned exponent;
  };

  // f = K*(v - r)^e with K a nonzero scalar and r free of v.
  static std::optional<MultiPoly> forced_value(const MultiPoly& f, const std::string& v, unsigned& e) {
    e = f.degree_in(v);
    if (e == 0) return std::nullopt;
    const MultiPoly lead = f.coefficient_of(v, e);
    if (!lead.is_constant()) return std::nullopt;
    const FieldElem k = lead.constant_term();
    if (e == 1) return -(f - MultiPoly::variable(v).scaled(k)).scaled(k.inverse());
    const MultiPoly next = f.coefficient_of(v, e - 1);
    const MultiPoly r = -next.scaled((k * FieldElem(static_cast<long>(e))).inverse());
    if (r.degree_in(v) != 0) return std::nullopt;
    if ((MultiPoly::variable(v) - r).pow(e).scaled(k) != f) return std::nullopt;
    return r;
  }

  std::optional<Elimination> pick_elimination(const std::vector<Constraint>& eqs) const {
    std::optional<Elimination> best;
    auto better = [&](const Elimination& a, const Elimination& b) {
      if ((a.exponent == 1) != (b.exponent == 1)) return a.exponent == 1;
      if (rank(a.var) != rank(b.var)) return rank(a.var) > rank(b.var);
      if (a.var != b.var) return a.var > b.var;
      return a.index < b.index;
    };
    for (std::size_t i = 0; i < eqs.size(); ++i) {
      for (const auto& v : eqs[i].poly.variables()) {
        unsigned e = 0;
        auto r = forced_value(eqs[i].poly, v, e);
        if (!r) continue;
        Elimination cand{i, v, std::move(*r), e};
        if (!best || better(cand, *best)) best = std::move(cand);
      }
    }
    return best;
  }

  static void assign(SolverBranch& b, const std::string& var, const MultiPoly& value) {
    for (auto& [k, v] : b.assignment) v = v.substitute(var, value);
    b.assignment[var] = value;
    b.history.push_back(var + " := " + value.to_string());
  }

  void run(SolverBranch b, std::vector<Constraint> eqs, Stack& stack, SolveOutcome& out) const {
    for (;;) {
      if (!simplify(b, eqs, out)) return;
      if (eqs.empty()) {
        out.branches.push_back(std::move(b));
        return;
      }
      if (auto e = pick_elimination(eqs)) {
        assign(b, e->var, e->value);
        continue;
      }
      // Split on the monomial factor of the smallest constraint that has one.
      std::optional<std::size_t> pick;
      Monomial content;
      for (std::size_t i = 0; i < eqs.size(); ++i) {
        Monomial m = eqs[i].poly.monomial_content();
        if (m.empty()) continue;
        if (!pick || eqs[i].poly.size() < eqs[*pick].poly.size()) {
          pick = i;
          content = std::move(m);
        }
      }
      if (!pick) {
        b.pending = std::move(eqs);
        out.branches.push_back(std::move(b));
        return;
      }
      const Constraint chosen = eqs[*pick];
      const MultiPoly cofactor = chosen.poly.divided_by(content);
      // Cofactor branch first on the stack so the zero branches are explored first.
      {
        auto rest = eqs;
        rest[*pick].poly = cofactor;
        SolverBranch nb = b;
        nb.history.push_back("split " + chosen.origin + ": cofactor");
        stack.emplace_back(std::move(nb), std::move(rest));
      }
      std::vector<std::string> vars;
      for (const auto& [v, e] : content) vars.push_back(v);
      std::sort(vars.begin(), vars.end(), [&](const std::string& x, const std::string& y) {
        return rank(x) != rank(y) ? rank(x) < rank(y) : x < y;
      });
      for (const auto& v : vars) {
        SolverBranch nb = b;
        assign(nb, v, MultiPoly());
        stack.emplace_back(std::move(nb), eqs);
      }
      return;
    }
  }

  Rank rank_;
  std::size_t budget_;
};

}  // namespace laistry
