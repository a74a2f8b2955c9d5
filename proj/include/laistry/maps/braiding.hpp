#pragma once

#include <array>
#include <string>

#include "laistry/errors.hpp"
#include "laistry/scalars/matrix.hpp"

namespace laistry {

// Braiding of the block-plus-point space with basis x1, x2, x3:
// c(x_i ⊗ x_j) = g_i · x_j ⊗ x_i with g_1 = g_2 = alpha_1, g_3 = alpha_2 and
//   alpha_1: x1 -> q11 x1, x2 -> q11 (x2 + x1),   x3 -> q12 x3
//   alpha_2: x1 -> q21 x1, x2 -> q21 (x2 + a x1), x3 -> q22 x3
struct BraidingParams {
  FieldElem q11{1}, q12{1}, q21{1}, q22{1};
  FieldElem a{0};

  void validate() const {
    if (q11.is_zero() || q12.is_zero() || q21.is_zero() || q22.is_zero())
      throw InvalidSpec("braiding scalars q_ij must be nonzero");
  }

  // q11 = q22 = 1, q12 = q, q21 = q^-1, a = -G/2.
  static BraidingParams laistrygonian(const FieldElem& q, unsigned ghost) {
    BraidingParams b;
    b.q11 = q.one_like();
    b.q22 = q.one_like();
    b.q12 = q;
    b.q21 = q.inverse();
    b.a = FieldElem(mpq_class(-static_cast<long>(ghost), 2));
    return b;
  }

  friend bool operator==(const BraidingParams& x, const BraidingParams& y) {
    return x.q11 == y.q11 && x.q12 == y.q12 && x.q21 == y.q21 && x.q22 == y.q22 && x.a == y.a;
  }
};

struct TwistParams {
  FieldElem p12{1}, p21{1};

  void validate() const {
    if (p12.is_zero() || p21.is_zero()) throw InvalidSpec("twist scalars must be nonzero");
  }

  friend TwistParams operator*(const TwistParams& x, const TwistParams& y) { return {x.p12 * y.p12, x.p21 * y.p21}; }
};

// 3x3 matrix of the action of alpha_1 (which = 1) or alpha_2 (which = 2) on
// x1, x2, x3; column k holds the image of x_{k+1}.
inline Matrix grading_action(const BraidingParams& b, int which) {
  Matrix m(3, 3);
  const FieldElem& d = which == 1 ? b.q11 : b.q21;
  const FieldElem off = which == 1 ? b.q11 : b.q21 * b.a;
  m(0, 0) = d;
  m(1, 1) = d;
  m(0, 1) = off;
  m(2, 2) = which == 1 ? b.q12 : b.q22;
  return m;
}

// 9x9 matrix of c on the basis x_i ⊗ x_j (index 3(i-1) + (j-1)); column k is
// the image of the k-th basis tensor.
inline Matrix braiding_matrix(const BraidingParams& b) {
  b.validate();
  const Matrix a1 = grading_action(b, 1), a2 = grading_action(b, 2);
  Matrix c(9, 9);
  for (std::size_t i = 0; i < 3; ++i) {
    const Matrix& g = i < 2 ? a1 : a2;
    for (std::size_t j = 0; j < 3; ++j) {
      const std::size_t in = 3 * i + j;
      // g · x_j = sum_k g(k, j) x_k, then tensor with x_i.
      for (std::size_t k = 0; k < 3; ++k)
        if (!g(k, j).is_zero()) c(3 * k + i, in) = g(k, j);
    }
  }
  return c;
}

// (c ⊗ id)(id ⊗ c)(c ⊗ id) == (id ⊗ c)(c ⊗ id)(id ⊗ c) on V^{⊗3}, for c on V ⊗ V.
inline bool braid_equation_holds(const Matrix& c) {
  std::size_t n = 0;
  while (n * n < c.rows()) ++n;
  if (n * n != c.rows() || !c.is_square()) throw InvalidSpec("braiding must act on V ⊗ V");
  const Matrix id = Matrix::identity(n);
  const Matrix c1 = Matrix::kron(c, id), c2 = Matrix::kron(id, c);
  return c1 * c2 * c1 == c2 * c1 * c2;
}

inline bool braid_equation_check(const BraidingParams& b) { return braid_equation_holds(braiding_matrix(b)); }

// Cocycle twist by sigma(alpha_i, alpha_j) = p_ij.
inline BraidingParams twist_braiding(const BraidingParams& b, const TwistParams& t) {
  b.validate();
  t.validate();
  BraidingParams r = b;
  r.q12 = t.p12 * t.p21.inverse() * b.q12;
  r.q21 = t.p21 * t.p12.inverse() * b.q21;
  return r;
}

}  // namespace laistry
