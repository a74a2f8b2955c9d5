#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "laistry/pbw/engine.hpp"
#include "laistry/repr/rep.hpp"
#include "laistry/scalars/polysystem.hpp"

namespace laistry {

// Scalar actions of the generators on a one-dimensional module.
struct Character {
  FieldElem alpha, beta;
  std::vector<FieldElem> gamma;  // gamma[n] is the action of z_n

  static Character of(const MatrixRep& rep) {
    if (rep.dim != 1) throw InvalidSpec("a character is a one-dimensional representation");
    Character c{rep[X1](0, 0), rep[X2](0, 0), {}};
    for (unsigned n = 0; n <= rep.params.ghost; ++n) c.gamma.push_back(rep[z(n)](0, 0));
    return c;
  }

  MatrixRep to_rep(const AlgebraParams& params) const {
    if (gamma.size() != params.ghost + 1) throw InvalidSpec("character has the wrong number of z values");
    MatrixRep rep(params, 1);
    rep[X1](0, 0) = alpha;
    rep[X2](0, 0) = beta;
    for (unsigned n = 0; n <= params.ghost; ++n) rep[z(n)](0, 0) = gamma[n];
    return rep;
  }
};

inline std::string character_variable(Gen g) {
  if (g == X1) return "alpha";
  if (g == X2) return "beta";
  return "gamma" + std::to_string(z_index(g));
}

// The defining relations read in a commutative ring: every word becomes the
// product of the corresponding character variables.
inline std::vector<Constraint> character_system(const Engine& e) {
  std::vector<Constraint> out;
  for (const auto& rel : e.defining_relations()) {
    MultiPoly p;
    for (const auto& [w, c] : rel.poly.terms()) {
      Monomial m;
      for (char ch : w) ++m[character_variable(static_cast<Gen>(ch))];
      p.add_term(m, c);
    }
    out.push_back({p, rel.name});
  }
  return out;
}

// A family of characters: the variables in `free` range over k, the others
// are given by `values` in terms of them.
struct CharacterFamily {
  std::vector<std::string> free;
  std::map<std::string, MultiPoly> values;

  bool contains(const Character& c) const {
    std::map<std::string, MultiPoly> point;
    point["alpha"] = MultiPoly(c.alpha);
    point["beta"] = MultiPoly(c.beta);
    for (std::size_t n = 0; n < c.gamma.size(); ++n) point["gamma" + std::to_string(n)] = MultiPoly(c.gamma[n]);
    for (const auto& [v, f] : values) {
      auto it = point.find(v);
      if (it == point.end() || f.substitute(point) != it->second) return false;
    }
    return true;
  }

  // Every point of this family satisfies the equations of `other`.
  bool subset_of(const CharacterFamily& other) const {
    for (const auto& [v, f] : other.values) {
      auto it = values.find(v);
      const MultiPoly mine = it == values.end() ? MultiPoly::variable(v) : it->second;
      if (f.substitute(values) != mine) return false;
    }
    return true;
  }
};

struct CharacterCase {
  std::string label;  // e.g. "q = 1" or "q != 1"
  QSpec spec;
  std::vector<CharacterFamily> families;
  std::vector<std::string> unresolved;  // pending equations, if the solver left any
};

inline std::vector<CharacterFamily> character_families(const Engine& e, std::vector<std::string>* unresolved = nullptr) {
  std::vector<std::string> vars;
  for (Gen g : e.params().generators()) vars.push_back(character_variable(g));
  // Eliminate the highest z first.
  auto rank = [](const std::string& v) -> long {
    if (v.rfind("gamma", 0) == 0) return 1 + std::stol(v.substr(5));
    return 0;
  };
  const SolveOutcome out = PolySystemSolver(rank).solve(character_system(e));
  std::vector<CharacterFamily> fams;
  for (const auto& b : out.branches) {
    if (unresolved)
      for (const auto& c : b.pending) unresolved->push_back(c.origin + ": " + c.poly.to_string());
    CharacterFamily f;
    for (const auto& v : vars) {
      if (b.assignment.count(v)) f.values[v] = b.assignment.at(v);
      else f.free.push_back(v);
    }
    fams.push_back(std::move(f));
  }
  // Drop families contained in another one.
  std::vector<CharacterFamily> kept;
  for (std::size_t i = 0; i < fams.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < fams.size() && !redundant; ++j) {
      if (i == j || !fams[i].subset_of(fams[j])) continue;
      redundant = !fams[j].subset_of(fams[i]) || j < i;
    }
    if (!redundant) kept.push_back(fams[i]);
  }
  return kept;
}

// All characters of B. A generic q is solved symbolically (q != 1 there) and
// the case q = 1 is added separately.
inline std::vector<CharacterCase> solve_characters(const AlgebraParams& params) {
  std::vector<CharacterCase> out;
  auto run = [&](const std::string& label, const QSpec& spec) {
    CharacterCase c{label, spec, {}, {}};
    c.families = character_families(Engine(AlgebraParams(params.ghost, spec)), &c.unresolved);
    out.push_back(std::move(c));
  };
  if (params.q.is_generic()) {
    run("q != 1", params.q);
    run("q = 1", QSpec::numeric(1));
  } else {
    const bool one = params.q.kind() == QSpec::Kind::Numeric && params.q.value() == 1;
    run(one ? "q = 1" : "q != 1", params.q);
  }
  return out;
}

}  // namespace laistry
