#pragma once

#include <string>

#include "laistry/errors.hpp"
#include "laistry/pbw/engine.hpp"

namespace laistry {

enum class QuotientKind {
  ModX1,         // by the ideal generated by x1
  ModZG,         // by the ideal generated by z_G, landing in the algebra with ghost G-1
  QuantumPlane,  // onto k_q[X,Y] with X = x2, Y = z0
};

inline std::string quotient_name(QuotientKind k) {
  switch (k) {
    case QuotientKind::ModX1: return "mod-x1";
    case QuotientKind::ModZG: return "mod-zG";
    case QuotientKind::QuantumPlane: return "quantum-plane";
  }
  return {};
}

// Whether a PBW word lies in the kernel of the quotient map.
inline bool is_killed(QuotientKind k, const Word& w, unsigned ghost) {
  for (char c : w) {
    const Gen g = static_cast<Gen>(c);
    switch (k) {
      case QuotientKind::ModX1:
        if (g == X1) return true;
        break;
      case QuotientKind::ModZG:
        if (is_z(g) && z_index(g) == ghost) return true;
        break;
      case QuotientKind::QuantumPlane:
        if (g == X1 || (is_z(g) && z_index(g) >= 1)) return true;
        break;
    }
  }
  return false;
}

// Normal form with the PBW monomials of the kernel dropped.
inline NCPoly project(const Engine& e, const NCPoly& p, QuotientKind k) {
  const unsigned G = e.ghost();
  return e.normal_form(p).filtered([&](const Word& w) { return !is_killed(k, w, G); });
}

// The quantum plane k_q[X,Y], XY = qYX, with X and Y spelled x2 and z0.
// Normal form: a word with m letters X and n letters Y equals
// q^-(number of Y before X pairs) X^m Y^n.
class QuantumPlane {
 public:
  explicit QuantumPlane(QSpec q) : q_(FieldElem::q(q)), qinv_(q_.inverse()) {}

  const FieldElem& q() const { return q_; }

  NCPoly normal_form(const NCPoly& p) const {
    NCPoly out;
    for (const auto& [w, c] : p.terms()) {
      long inversions = 0;
      unsigned ys = 0, xs = 0;
      for (char ch : w) {
        const Gen g = static_cast<Gen>(ch);
        if (g == X2) {
          inversions += ys;
          ++xs;
        } else if (g == z(0)) {
          ++ys;
        } else {
          throw InvalidSpec("quantum plane words use only x2 and z0, got " + gen_name(g));
        }
      }
      Word v(xs, static_cast<char>(X2));
      v.append(ys, static_cast<char>(z(0)));
      out.add_term(v, c * qinv_.pow(inversions));
    }
    return out;
  }

  // nu: x1, z_j (j >= 1) -> 0, x2 -> X, z0 -> Y, applied to any free-algebra element.
  NCPoly nu(const NCPoly& p) const {
    NCPoly kept = p.filtered([](const Word& w) {
      for (char c : w) {
        const Gen g = static_cast<Gen>(c);
        if (g != X2 && g != z(0)) return false;
      }
      return true;
    });
    return normal_form(kept);
  }

 private:
  FieldElem q_;
  FieldElem qinv_;
};

// nu_G computed as nu_1 pi_2 ... pi_G: kill z_G, z_{G-1}, ... one algebra at a time.
inline NCPoly nu_by_tower(const NCPoly& p, const AlgebraParams& params) {
  NCPoly cur = p;
  for (unsigned g = params.ghost; g >= 2; --g) {
    const Engine step(AlgebraParams(g, params.q));
    cur = project(step, cur, QuotientKind::ModZG);
  }
  return QuantumPlane(params.q).nu(Engine(AlgebraParams(1, params.q)).normal_form(cur));
}

// psi: B(L_q(1, G-f)) -> B(L_q(1, G)), x_i -> x_i, z_n -> z_{f+n}.
inline NCPoly embed_psi(const NCPoly& p, unsigned shift, const AlgebraParams& target) {
  const unsigned G = target.ghost;
  if (shift < 1 || shift + 1 > G) throw IndexOutOfRange("shift must lie in [1, G-1]");
  return p.map_generators([&](Gen g) {
    if (!is_z(g)) return NCPoly::gen(g);
    if (z_index(g) > G - shift)
      throw IndexOutOfRange("z" + std::to_string(z_index(g)) + " does not exist in the source algebra");
    return zn(z_index(g) + shift);
  });
}

}  // namespace laistry
