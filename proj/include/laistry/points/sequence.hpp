#pragma once

#include <array>
#include <string>
#include <vector>

#include "laistry/errors.hpp"
#include "laistry/pbw/word.hpp"
#include "laistry/scalars/field.hpp"
#include "laistry/scalars/parse.hpp"

namespace laistry {

// A point (a : b : c) of P^2, stored with its first nonzero coordinate equal to 1.
class ProjPoint {
 public:
  ProjPoint(const FieldElem& a, const FieldElem& b, const FieldElem& c) : x_{a, b, c} {
    std::size_t k = 0;
    while (k < 3 && x_[k].is_zero()) ++k;
    if (k == 3) throw InvalidSpec("(0:0:0) is not a projective point");
    const FieldElem inv = x_[k].inverse();
    for (auto& v : x_) v *= inv;
  }

  // "a:b:c" with scalar expressions for the coordinates.
  static ProjPoint parse(const std::string& text, const QSpec& spec) {
    std::vector<std::string> parts{""};
    for (char ch : text) {
      if (ch == ':') parts.emplace_back();
      else parts.back() += ch;
    }
    if (parts.size() != 3) throw InvalidSpec("a point needs three coordinates a:b:c, got '" + text + "'");
    return ProjPoint(parse_scalar(parts[0], spec), parse_scalar(parts[1], spec), parse_scalar(parts[2], spec));
  }

  const FieldElem& a() const { return x_[0]; }
  const FieldElem& b() const { return x_[1]; }
  const FieldElem& c() const { return x_[2]; }
  const FieldElem& operator[](std::size_t i) const { return x_[i]; }

  friend bool operator==(const ProjPoint& p, const ProjPoint& r) { return p.x_ == r.x_; }
  friend bool operator!=(const ProjPoint& p, const ProjPoint& r) { return !(p == r); }

  std::string to_string() const { return "(" + a().to_string() + ":" + b().to_string() + ":" + c().to_string() + ")"; }

 private:
  std::array<FieldElem, 3> x_;
};

// x1 v_i = a_i v_{i+1}, x2 v_i = b_i v_{i+1}, z0 v_i = c_i v_{i+1}, with
// (a_i : b_i : c_i) = pts[i] and the normalized coordinates used as scalars.
struct PointSequence {
  AlgebraParams params;
  std::vector<ProjPoint> pts;

  std::size_t depth() const { return pts.empty() ? 0 : pts.size() - 1; }
};

// The sequence through P0, for P0 on V(X0 X2):
//   a0 != 0:          P_i = (1 : b0 - i/2 : 0)
//   a0 = 0, b0 != 0:  P_i = (0 : 1 : q^-i c0/b0)
//   P0 = (0 : 0 : 1): constant.
inline PointSequence propagate(const ProjPoint& p0, const AlgebraParams& params, unsigned depth) {
  params.validate();
  PointSequence s{params, {}};
  const QSpec& spec = params.q;
  const FieldElem zero(spec), one(spec, 1);
  if (!p0.a().is_zero()) {
    if (!p0.c().is_zero()) throw NotOnVariety("a0 and c0 are both nonzero, so " + p0.to_string() + " is not on V(X0 X2)");
    for (unsigned i = 0; i <= depth; ++i)
      s.pts.emplace_back(one, p0.b().specialize(spec) - FieldElem(spec, mpq_class(i, 2)), zero);
  } else if (!p0.b().is_zero()) {
    const FieldElem qinv = FieldElem::q(spec).inverse();
    for (unsigned i = 0; i <= depth; ++i) s.pts.emplace_back(zero, one, qinv.pow(i) * p0.c());
  } else {
    s.pts.assign(depth + 1, p0);
  }
  return s;
}

}  // namespace laistry
