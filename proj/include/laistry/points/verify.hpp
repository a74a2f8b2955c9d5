#pragma once

#include <string>
#include <vector>

#include "laistry/errors.hpp"
#include "laistry/pbw/engine.hpp"
#include "laistry/pbw/identities.hpp"
#include "laistry/points/zeta.hpp"
#include "laistry/report.hpp"

namespace laistry {

// The same element with every z_n (n >= 1) replaced by
// sum_k C(n,k) (-q)^k x2^(n-k) z0 x2^k, so only x1, x2 and z0 remain.
inline NCPoly expand_in_degree_one(const NCPoly& p, const FieldElem& q) {
  return p.map_generators([&](Gen g) {
    if (is_z(g) && z_index(g) > 0) return z_via_x2_z0(q, z_index(g));
    return NCPoly::gen(g);
  });
}

// Scalar by which a word in x1, x2, z0 sends v_i to v_{i+len}: the rightmost
// letter acts first.
template <class T>
T word_action(const Word& w, std::size_t i, const SequenceScalars<T>& s) {
  T r(FieldElem(1));
  const std::size_t L = w.size();
  for (std::size_t k = 0; k < L; ++k) {
    const Gen g = at(w, L - 1 - k);
    const std::size_t idx = i + k;
    if (g == X1) r = r * s.a[idx];
    else if (g == X2) r = r * s.b[idx];
    else if (g == z(0)) r = r * s.c[idx];
    else throw InvalidSpec("word action needs x1, x2 and z0 only, got " + gen_name(g));
  }
  return r;
}

template <class T>
T act_on_v(const NCPoly& p, std::size_t i, const SequenceScalars<T>& s) {
  T r;
  for (const auto& [w, c] : p.terms()) r = r + T(c) * word_action(w, i, s);
  return r;
}

// Evaluates every defining relation on every v_i the sequence reaches, in two
// independent ways: expanding the relation into words in x1, x2, z0 (word
// arm), and through the zeta recursion (scalar arm).
inline Report verify_truncated(const PointSequence& seq) {
  const unsigned G = seq.params.ghost;
  if (seq.pts.size() < G + 3) throw InvalidSpec("sequence must have at least G + 3 points");
  const Engine e(seq.params);
  const auto s = scalars_of(seq);
  const std::size_t D = seq.depth();
  Report r;
  r.suite = "point sequence";
  for (const auto& rel : e.defining_relations()) {
    const NCPoly p = expand_in_degree_one(rel.poly, e.q());
    const std::size_t L = p.degree();
    for (std::size_t i = 0; i + L <= D + 1; ++i) {
      const FieldElem v = act_on_v(p, i, s);
      r.add("word " + rel.name + " @ v" + std::to_string(i), v.is_zero(), v.is_zero() ? "" : "value " + v.to_string());
    }
  }
  for (const auto& eq : scalar_equations(s, G))
    r.add("scalar " + eq.relation + " @ v" + std::to_string(eq.index), eq.value.is_zero(),
          eq.value.is_zero() ? "" : "value " + eq.value.to_string());
  return r;
}

}  // namespace laistry
