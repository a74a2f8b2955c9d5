#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "laistry/errors.hpp"
#include "laistry/pbw/engine.hpp"
#include "laistry/pbw/hilbert.hpp"
#include "laistry/pbw/identities.hpp"
#include "laistry/report.hpp"
#include "laistry/scalars/matrix.hpp"

namespace laistry {

// A finite-dimensional representation: one dim x dim matrix per generator,
// indexed by generator code (x1, x2, z0, ..., zG).
struct MatrixRep {
  AlgebraParams params;
  std::size_t dim = 0;
  std::vector<Matrix> mats;

  MatrixRep() = default;
  MatrixRep(AlgebraParams p, std::size_t d) : params(std::move(p)), dim(d) {
    const FieldElem zero = FieldElem(params.q);
    mats.assign(params.generator_count(), Matrix(d, d, zero));
  }

  Matrix& operator[](Gen g) {
    check(g);
    return mats[g];
  }
  const Matrix& operator[](Gen g) const {
    check(g);
    return mats[g];
  }

  void validate() const {
    if (mats.size() != params.generator_count()) throw InvalidSpec("representation needs one matrix per generator");
    for (const auto& m : mats)
      if (m.rows() != dim || m.cols() != dim) throw InvalidSpec("representation matrices must be dim x dim");
  }

  // Image of an element of the free algebra.
  Matrix evaluate(const NCPoly& p) const {
    Matrix out(dim, dim, FieldElem(params.q));
    for (const auto& [w, c] : p.terms()) {
      params.check_word(w);
      Matrix m = Matrix::identity(dim, FieldElem(params.q, 1));
      for (char ch : w) m = m * mats[static_cast<Gen>(ch)];
      out += m.scaled(c);
    }
    return out;
  }

 private:
  void check(Gen g) const {
    if (!params.contains(g)) throw IndexOutOfRange("generator " + gen_name(g) + " is not part of this algebra");
  }
};

inline MatrixRep zero_rep(const AlgebraParams& params, std::size_t dim) { return MatrixRep(params, dim); }

// Evaluates every defining relation, and the derived ones, on the matrices.
// Use enforce<RelationFailure>() on the result to turn a failure into an error.
inline Report rep_check(const MatrixRep& rep) {
  rep.validate();
  const Engine e(rep.params);
  Report r;
  r.suite = "rep";
  auto add = [&](const std::string& name, const NCPoly& rel) {
    const Matrix m = rep.evaluate(rel);
    r.add(name, m.is_zero(), m.is_zero() ? std::string() : "nonzero matrix");
  };
  for (const auto& rel : e.defining_relations()) add(rel.name, rel.poly);
  for (const auto& rel : e.derived_relations()) add("derived " + rel.name, rel.poly);
  return r;
}

// B acting by left multiplication on B / B_{>D}, with the PBW monomials of
// degree <= D as basis. All generators act nilpotently.
inline MatrixRep truncated_regular_rep(const Engine& e, unsigned max_degree) {
  std::vector<Word> basis;
  std::map<Word, std::size_t> index;
  for (unsigned d = 0; d <= max_degree; ++d)
    for (const auto& m : pbw_monomials(e.ghost(), d)) {
      index[m.to_word()] = basis.size();
      basis.push_back(m.to_word());
    }
  MatrixRep rep(e.params(), basis.size());
  for (Gen g : e.params().generators())
    for (std::size_t col = 0; col < basis.size(); ++col) {
      if (word_degree(basis[col]) + weight(g) > max_degree) continue;
      const NCPoly image = e.normal_form(NCPoly::gen(g) * NCPoly::monomial(basis[col]));
      for (const auto& [w, c] : image.terms()) rep[g](index.at(w), col) = c;
    }
  return rep;
}

namespace detail {

// Adds v to an echelon basis kept as rows; returns false if v was dependent.
inline bool extend_span(std::vector<std::vector<FieldElem>>& rows, std::vector<std::size_t>& pivots,
                        std::vector<FieldElem> v) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const FieldElem f = v[pivots[i]];
    if (f.is_zero()) continue;
    for (std::size_t k = 0; k < v.size(); ++k) v[k] -= f * rows[i][k];
  }
  std::size_t p = 0;
  while (p < v.size() && v[p].is_zero()) ++p;
  if (p == v.size()) return false;
  const FieldElem inv = v[p].inverse();
  for (auto& x : v) x *= inv;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const FieldElem f = rows[i][p];
    if (f.is_zero()) continue;
    for (std::size_t k = 0; k < v.size(); ++k) rows[i][k] -= f * v[k];
  }
  rows.push_back(std::move(v));
  pivots.push_back(p);
  return true;
}

inline std::vector<FieldElem> apply(const Matrix& m, const std::vector<FieldElem>& v) {
  std::vector<FieldElem> out(m.rows(), v.empty() ? FieldElem(0) : v[0].zero_like());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero() && !v[j].is_zero()) out[i] += m(i, j) * v[j];
  return out;
}

inline std::vector<FieldElem> flatten(const Matrix& m) {
  std::vector<FieldElem> out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
  return out;
}

}  // namespace detail

// Dimension of the submodule generated by v.
inline std::size_t generated_submodule_dim(const MatrixRep& rep, const std::vector<FieldElem>& v) {
  std::vector<std::vector<FieldElem>> rows;
  std::vector<std::size_t> pivots;
  std::vector<std::vector<FieldElem>> frontier;
  if (detail::extend_span(rows, pivots, v)) frontier.push_back(v);
  while (!frontier.empty()) {
    std::vector<std::vector<FieldElem>> next;
    for (const auto& u : frontier)
      for (const auto& m : rep.mats) {
        auto w = detail::apply(m, u);
        if (detail::extend_span(rows, pivots, w)) next.push_back(std::move(w));
      }
    frontier = std::move(next);
  }
  return rows.size();
}

// Dimension of the subalgebra of End(V) generated by the action.
inline std::size_t action_algebra_dim(const MatrixRep& rep) {
  std::vector<std::vector<FieldElem>> rows;
  std::vector<std::size_t> pivots;
  std::vector<Matrix> frontier;
  const Matrix id = Matrix::identity(rep.dim, FieldElem(rep.params.q, 1));
  if (detail::extend_span(rows, pivots, detail::flatten(id))) frontier.push_back(id);
  while (!frontier.empty()) {
    std::vector<Matrix> next;
    for (const auto& a : frontier)
      for (const auto& m : rep.mats) {
        Matrix p = m * a;
        if (detail::extend_span(rows, pivots, detail::flatten(p))) next.push_back(std::move(p));
      }
    frontier = std::move(next);
  }
  return rows.size();
}

inline bool has_distinct_diagonal(const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && !m(i, j).is_zero()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.rows(); ++j)
      if (m(i, i) == m(j, j)) return false;
  return true;
}

// Simplicity over the algebraic closure. With x2 diagonal with distinct
// entries every submodule is spanned by basis vectors, so it suffices that
// each basis vector generates V. Otherwise, for dim <= 4, the action must
// generate all of End(V).
inline bool is_simple(const MatrixRep& rep) {
  rep.validate();
  if (rep.dim == 0) throw Unsupported("simplicity of the zero module is not defined");
  if (rep.dim == 1) return true;
  const Matrix& x2m = rep[X2];
  if (has_distinct_diagonal(x2m)) {
    for (std::size_t i = 0; i < rep.dim; ++i) {
      std::vector<FieldElem> e(rep.dim, FieldElem(rep.params.q));
      e[i] = FieldElem(rep.params.q, 1);
      if (generated_submodule_dim(rep, e) != rep.dim) return false;
    }
    return true;
  }
  if (rep.dim <= 4) return action_algebra_dim(rep) == rep.dim * rep.dim;
  throw Unsupported("simplicity test needs x2 diagonal with distinct entries, or dimension at most 4");
}

// z_{G-1} x2^j = q^-j x2^j z_{G-1} - j q^-j x2^{j-1} z_G, as a matrix identity.
inline bool top_commutation_holds(const MatrixRep& rep, unsigned j) {
  if (rep.params.ghost < 1) throw InvalidSpec("needs ghost >= 1");
  const Engine e(rep.params);
  return rep.evaluate(top_commutation_identity(e, j)).is_zero();
}

}  // namespace laistry
