#pragma once

#include <string>
#include <utility>

#include "laistry/errors.hpp"
#include "laistry/repr/rep.hpp"

namespace laistry {

// A module over k_q[X,Y] (XY = qYX) given by its two matrices.
struct QPRep {
  QSpec spec;
  Matrix X, Y;

  std::size_t dim() const { return X.rows(); }

  bool relation_holds() const {
    const FieldElem q = FieldElem::q(spec);
    return (X * Y - (Y * X).scaled(q)).is_zero();
  }
};

struct QPModuleSpec {
  enum class Kind { CharX, CharY, Cyclic };
  Kind kind = Kind::CharX;
  FieldElem a{1}, b{0};
  unsigned N = 0;

  static QPModuleSpec char_x(FieldElem a) { return {Kind::CharX, std::move(a), FieldElem(0), 1}; }
  static QPModuleSpec char_y(FieldElem a) { return {Kind::CharY, std::move(a), FieldElem(0), 1}; }
  static QPModuleSpec cyclic(FieldElem a, FieldElem b, unsigned N) { return {Kind::Cyclic, std::move(a), std::move(b), N}; }

  std::string name() const {
    switch (kind) {
      case Kind::CharX: return "CharX(" + a.to_string() + ")";
      case Kind::CharY: return "CharY(" + a.to_string() + ")";
      case Kind::Cyclic: return "Cyclic(" + a.to_string() + "," + b.to_string() + "," + std::to_string(N) + ")";
    }
    return {};
  }
};

// Multiplicative order of q when it is finite and known: the N of RootOfUnity(N),
// or 1 and 2 for the rationals 1 and -1.
inline unsigned order_of_q(const QSpec& s) {
  switch (s.kind()) {
    case QSpec::Kind::RootOfUnity: return s.order();
    case QSpec::Kind::Numeric:
      if (s.value() == 1) return 1;
      if (s.value() == -1) return 2;
      return 0;
    case QSpec::Kind::Generic: return 0;
  }
  return 0;
}

// CharX(a): X = (a), Y = (0). CharY(a): X = (0), Y = (a).
// Cyclic(a, b, N): X e_i = a q^(i-1) e_i, Y e_j = e_{j+1}, Y e_N = b e_1.
inline QPRep build_qp_module(const QPModuleSpec& s, const QSpec& spec) {
  if (s.a.is_zero()) throw InvalidSpec("a must be nonzero");
  const FieldElem zero(spec), one(spec, 1);
  const FieldElem a = s.a.specialize(spec);
  switch (s.kind) {
    case QPModuleSpec::Kind::CharX: return {spec, Matrix(1, 1, a), Matrix(1, 1, zero)};
    case QPModuleSpec::Kind::CharY: return {spec, Matrix(1, 1, zero), Matrix(1, 1, a)};
    case QPModuleSpec::Kind::Cyclic: {
      const unsigned N = order_of_q(spec);
      if (N < 2 || spec.kind() == QSpec::Kind::Generic)
        throw InvalidSpec("cyclic modules need q to be a root of unity of order at least 2");
      if (s.N != N) throw InvalidSpec("cyclic module size must equal the order of q");
      if (s.b.is_zero()) throw InvalidSpec("b must be nonzero");
      const FieldElem q = FieldElem::q(spec);
      QPRep r{spec, Matrix(N, N, zero), Matrix(N, N, zero)};
      for (unsigned i = 0; i < N; ++i) r.X(i, i) = a * q.pow(i);
      for (unsigned j = 0; j + 1 < N; ++j) r.Y(j + 1, j) = one;
      r.Y(0, N - 1) = s.b.specialize(spec);
      return r;
    }
  }
  return {};
}

// Pullback along B -> k_q[X,Y]: x1, z_j (j >= 1) act by 0, x2 by X, z0 by Y.
inline MatrixRep pullback(const QPRep& m, unsigned ghost) {
  MatrixRep rep(AlgebraParams(ghost, m.spec), m.dim());
  rep[X2] = m.X;
  rep[z(0)] = m.Y;
  return rep;
}

struct CyclicInvariants {
  FieldElem det_x2, det_z0;
  FieldElem a_power;  // a^N
  FieldElem b;
};

// For a pullback of Cyclic(a, b, N): det(x2) = (-1)^(N-1) a^N and
// det(z0) = (-1)^(N-1) b. Cyclic(a, b, N) and Cyclic(a', b', N) are isomorphic
// exactly when a'^N = a^N and b' = b, so (a^N, b) labels the class.
inline CyclicInvariants cyclic_invariants(const MatrixRep& rep) {
  rep.validate();
  const long n = static_cast<long>(rep.dim);
  const FieldElem sign((n - 1) % 2 == 0 ? 1 : -1);
  CyclicInvariants inv{rep[X2].determinant(), rep[z(0)].determinant(), FieldElem(0), FieldElem(0)};
  inv.a_power = sign * inv.det_x2;
  inv.b = sign * inv.det_z0;
  return inv;
}

inline std::pair<FieldElem, FieldElem> cyclic_class(const FieldElem& a, const FieldElem& b, const QSpec& spec) {
  const unsigned N = order_of_q(spec);
  if (N < 2) throw InvalidSpec("cyclic modules need q to be a root of unity of order at least 2");
  return {a.specialize(spec).pow(N), b.specialize(spec)};
}

}  // namespace laistry
