#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "laistry/errors.hpp"
#include "laistry/repr/rep.hpp"

namespace laistry {

// Candidate module of dimension l*N, q of order N, on which z_G acts by
// diag(lambda, lambda q, ..., lambda q^(N-1)) (blocks of size l), z_{G-1}
// shifts block i to block i+1 and sends the last block to the first through A,
// and x2 sends block j to block j-1 through B_j (block 1 to block N through B_1).
// Built in ghost 1 (z_{G-1} = z0, z_G = z1) with x1 = 0.
struct TopInvertibleCandidate {
  unsigned N = 0, l = 0;
  FieldElem lambda;
  Matrix A;
  std::vector<Matrix> B;  // B[0] = B_1, ..., B[N-1] = B_N
  MatrixRep rep;

  // Block (N, N) of x2 z0 - q z0 x2 - z1: B_1 A - q B_N - lambda q^(N-1).
  Matrix closing_residual() const {
    const FieldElem q = FieldElem::q(rep.params.q);
    const FieldElem lam = lambda * q.pow(N - 1);
    return B[0] * A - B[N - 1].scaled(q) - Matrix::identity(l, q.one_like()).scaled(lam);
  }
};

// B_2 = q A B_1 + lambda, B_{j+1} = q B_j + lambda q^(j-1): the blocks of
// x2 z0 - q z0 x2 - z1 other than the closing one then vanish.
inline TopInvertibleCandidate top_invertible_candidate(unsigned N, unsigned l, const FieldElem& lambda,
                                                       const Matrix& A, const Matrix& B1) {
  if (N < 2) throw InvalidSpec("q must have order at least 2");
  if (l < 1 || A.rows() != l || A.cols() != l || B1.rows() != l || B1.cols() != l)
    throw InvalidSpec("blocks must be l x l");
  const QSpec spec = QSpec::root_of_unity(N);
  const FieldElem q = FieldElem::q(spec);
  const FieldElem lam = lambda.specialize(spec);
  const Matrix I = Matrix::identity(l, q.one_like());
  TopInvertibleCandidate c{N, l, lam, A, {B1}, MatrixRep(AlgebraParams(1, spec), static_cast<std::size_t>(l) * N)};
  c.B.push_back((A * B1).scaled(q) + I.scaled(lam));
  for (unsigned j = 2; j < N; ++j) c.B.push_back(c.B.back().scaled(q) + I.scaled(lam * q.pow(j - 1)));
  auto put = [&](Matrix& m, unsigned bi, unsigned bj, const Matrix& block) {
    for (unsigned r = 0; r < l; ++r)
      for (unsigned s = 0; s < l; ++s) m(bi * l + r, bj * l + s) = block(r, s);
  };
  Matrix& z0 = c.rep[z(0)];
  Matrix& z1 = c.rep[z(1)];
  Matrix& x2m = c.rep[X2];
  for (unsigned i = 0; i + 1 < N; ++i) put(z0, i + 1, i, I);
  put(z0, 0, N - 1, A);
  for (unsigned i = 0; i < N; ++i) put(z1, i, i, I.scaled(lam * q.pow(i)));
  for (unsigned j = 1; j < N; ++j) put(x2m, j - 1, j, c.B[j]);
  put(x2m, N - 1, 0, B1);
  return c;
}

// For random invertible A, B_1 and lambda != 0: every relation but x2_z(0)
// holds, the closing residual equals B_1 A - A B_1 - N lambda q^(N-1), and its
// trace -l N lambda q^(N-1) is nonzero, so no choice of A, B_1 closes the module.
inline Report top_invertible_obstruction(unsigned N, unsigned l, std::uint64_t seed, unsigned trials = 3) {
  Report r;
  r.suite = "top-invertible N=" + std::to_string(N) + " l=" + std::to_string(l);
  const QSpec spec = QSpec::root_of_unity(N);
  const FieldElem q = FieldElem::q(spec);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(-4, 4), lam_dist(1, 9);
  auto random_invertible = [&]() {
    for (;;) {
      Matrix m(l, l, FieldElem(spec));
      for (unsigned i = 0; i < l; ++i)
        for (unsigned j = 0; j < l; ++j) m(i, j) = FieldElem(spec, entry(rng)) + FieldElem(spec, entry(rng)) * q;
      if (!m.determinant().is_zero()) return m;
    }
  };
  for (unsigned t = 0; t < trials; ++t) {
    const std::string tag = "trial " + std::to_string(t) + " ";
    const FieldElem lambda(spec, lam_dist(rng) * (entry(rng) < 0 ? -1 : 1));
    const Matrix A = random_invertible(), B1 = random_invertible();
    const TopInvertibleCandidate c = top_invertible_candidate(N, l, lambda, A, B1);
    const Report chk = rep_check(c.rep);
    bool others = true;
    for (const auto& ch : chk.checks)
      if (ch.name != "x2_z(0)" && !ch.pass) others = false;
    r.add(tag + "all other relations hold", others);
    const Matrix res = c.closing_residual();
    const FieldElem lam_top = c.lambda * q.pow(N - 1);
    const Matrix expected = B1 * A - A * B1 - Matrix::identity(l, q.one_like()).scaled(lam_top * FieldElem(static_cast<long>(N)));
    r.add(tag + "closing residual is a commutator shift", res == expected);
    const FieldElem tr = res.trace();
    r.add(tag + "trace of closing residual", tr == -lam_top * FieldElem(static_cast<long>(N) * l) && !tr.is_zero(),
          "trace " + tr.to_string());
    r.add(tag + "x2_z(0) fails", !chk.checks.empty() && [&] {
      for (const auto& ch : chk.checks)
        if (ch.name == "x2_z(0)") return !ch.pass;
      return false;
    }());
  }
  return r;
}

}  // namespace laistry
