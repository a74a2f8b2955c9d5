#pragma once

#include <string>
#include <type_traits>
#include <vector>

#include "laistry/errors.hpp"
#include "laistry/points/sequence.hpp"
#include "laistry/scalars/multipoly.hpp"

namespace laistry {

// Per-index scalars of a sequence, over FieldElem (numeric sequences) or
// MultiPoly (symbolic ones).
template <class T>
struct SequenceScalars {
  std::vector<T> a, b, c;
  FieldElem q;

  std::size_t depth() const { return a.empty() ? 0 : a.size() - 1; }
};

inline SequenceScalars<FieldElem> scalars_of(const PointSequence& s) {
  SequenceScalars<FieldElem> out{{}, {}, {}, FieldElem::q(s.params.q)};
  for (const auto& p : s.pts) {
    out.a.push_back(p.a());
    out.b.push_back(p.b());
    out.c.push_back(p.c());
  }
  return out;
}

inline SequenceScalars<MultiPoly> to_multipoly(const SequenceScalars<FieldElem>& s) {
  SequenceScalars<MultiPoly> out{{}, {}, {}, s.q};
  for (std::size_t i = 0; i < s.a.size(); ++i) {
    out.a.emplace_back(s.a[i]);
    out.b.emplace_back(s.b[i]);
    out.c.emplace_back(s.c[i]);
  }
  return out;
}

// zeta_i^(n): z_n v_i = zeta_i^(n) v_{i+n+1}, from
// zeta_i^(0) = c_i, zeta_i^(n) = zeta_i^(n-1) b_{i+n} - q b_i zeta_{i+1}^(n-1).
// Entries exist for i + n <= depth.
template <class T>
class ZetaTableT {
 public:
  ZetaTableT(const SequenceScalars<T>& s, unsigned max_n) : s_(s) {
    const std::size_t D = s.depth();
    const T q(s.q);
    zeta_.push_back(s.c);
    for (unsigned n = 1; n <= max_n && n <= D; ++n) {
      std::vector<T> row;
      const auto& prev = zeta_.back();
      for (std::size_t i = 0; i + n <= D; ++i) row.push_back(prev[i] * s.b[i + n] - q * s.b[i] * prev[i + 1]);
      zeta_.push_back(std::move(row));
    }
  }

  unsigned max_n() const { return static_cast<unsigned>(zeta_.size() - 1); }
  bool has(std::size_t i, unsigned n) const { return n < zeta_.size() && i < zeta_[n].size(); }

  const T& zeta(std::size_t i, unsigned n) const {
    if (!has(i, n)) throw IndexOutOfRange("zeta_" + std::to_string(i) + "^(" + std::to_string(n) + ") is outside the table");
    return zeta_[n][i];
  }

  // beta_{j,n} = b_j b_{j+1} ... b_{j+n}
  T beta(std::size_t j, unsigned n) const {
    if (j + n > s_.depth()) throw IndexOutOfRange("beta index outside the sequence");
    T r = s_.b[j];
    for (unsigned k = 1; k <= n; ++k) r = r * s_.b[j + k];
    return r;
  }

  // lambda_j^(0) = c_j / b_j, lambda_j^(n+1) = lambda_j^(n) - q lambda_{j+1}^(n).
  FieldElem lambda(std::size_t j, unsigned n) const
    requires std::is_same_v<T, FieldElem>
  {
    if (n == 0) {
      if (j > s_.depth()) throw IndexOutOfRange("lambda index outside the sequence");
      if (s_.b[j].is_zero()) throw DivisionByZero("lambda_j needs b_j != 0");
      return s_.c[j] / s_.b[j];
    }
    return lambda(j, n - 1) - s_.q * lambda(j + 1, n - 1);
  }

 private:
  SequenceScalars<T> s_;
  std::vector<std::vector<T>> zeta_;
};

using ZetaTable = ZetaTableT<FieldElem>;

template <class T>
struct ScalarEquation {
  std::string relation;
  std::size_t index;
  T value;
};

// The defining relations acting on v_i, written through the sequence scalars:
//   jordan  a_i b_{i+1} - a_{i+1} b_i + a_i a_{i+1} / 2
//   x1_z0   a_{i+1} c_i - q a_i c_{i+1}
//   z_z(n)  zeta_i^(n) zeta_{i+n+1}^(n) b_{i+2n+2} - 2q zeta_i^(n) zeta_{i+n+2}^(n) b_{i+n+1}
//           + q^2 zeta_{i+1}^(n) zeta_{i+n+2}^(n) b_i
//   x2_zG   zeta_i^(G) b_{i+G+1} - q b_i zeta_{i+1}^(G)
// The x2_z(n) relations with n < G hold by construction of zeta. Only
// equations whose scalars lie within the sequence are produced.
template <class T>
std::vector<ScalarEquation<T>> scalar_equations(const SequenceScalars<T>& s, unsigned ghost) {
  const std::size_t D = s.depth();
  const T q(s.q), half(FieldElem(mpq_class(1, 2))), two(FieldElem(2));
  const ZetaTableT<T> zt(s, ghost);
  std::vector<ScalarEquation<T>> out;
  for (std::size_t i = 0; i + 1 <= D; ++i) {
    out.push_back({"jordan", i, s.a[i] * s.b[i + 1] - s.a[i + 1] * s.b[i] + half * s.a[i] * s.a[i + 1]});
    out.push_back({"x1_z0", i, s.a[i + 1] * s.c[i] - q * s.a[i] * s.c[i + 1]});
  }
  for (unsigned n = 0; n < ghost; ++n)
    for (std::size_t i = 0; i + 2 * n + 2 <= D; ++i) {
      const T& zi = zt.zeta(i, n);
      const T& zi1 = zt.zeta(i + 1, n);
      const T& zm = zt.zeta(i + n + 1, n);
      const T& zm1 = zt.zeta(i + n + 2, n);
      out.push_back({"z_z(" + std::to_string(n) + ")", i,
                     zi * zm * s.b[i + 2 * n + 2] - two * q * zi * zm1 * s.b[i + n + 1] + q * q * zi1 * zm1 * s.b[i]});
    }
  for (std::size_t i = 0; i + ghost + 1 <= D; ++i)
    out.push_back({"x2_zG", i, zt.zeta(i, ghost) * s.b[i + ghost + 1] - q * s.b[i] * zt.zeta(i + 1, ghost)});
  return out;
}

}  // namespace laistry
