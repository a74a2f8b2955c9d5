#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "laistry/scalars/field.hpp"

namespace laistry {

// Exponent vector over named commuting variables; zero exponents are never stored.
using Monomial = std::map<std::string, unsigned>;

inline Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (const auto& [v, e] : b) r[v] += e;
  return r;
}

// Commutative polynomial in named variables with FieldElem coefficients.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, FieldElem>;

  MultiPoly() = default;
  MultiPoly(const FieldElem& c) {  // NOLINT: scalars embed implicitly
    if (!c.is_zero()) terms_.emplace(Monomial{}, c);
  }
  MultiPoly(long c) : MultiPoly(FieldElem(c)) {}  // NOLINT
  MultiPoly(int c) : MultiPoly(FieldElem(c)) {}   // NOLINT

  static MultiPoly variable(const std::string& name, unsigned power = 1) {
    MultiPoly p;
    Monomial m;
    if (power) m[name] = power;
    p.terms_.emplace(std::move(m), FieldElem(1));
    return p;
  }

  static MultiPoly term(const Monomial& m, const FieldElem& c) {
    MultiPoly p;
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
  FieldElem constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? FieldElem(0) : it->second;
  }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Monomial& m, const FieldElem& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }
  MultiPoly& operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(monomial_product(ma, mb), ca * cb);
    return r;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  MultiPoly scaled(const FieldElem& c) const {
    if (c.is_zero()) return {};
    MultiPoly r = *this;
    for (auto& [m, x] : r.terms_) x *= c;
    return r;
  }

  MultiPoly pow(unsigned e) const {
    MultiPoly result(1), base = *this;
    while (e) {
      if (e & 1u) result *= base;
      e >>= 1u;
      if (e) base *= base;
    }
    return result;
  }

  std::set<std::string> variables() const {
    std::set<std::string> out;
    for (const auto& [m, c] : terms_)
      for (const auto& [v, e] : m) out.insert(v);
    return out;
  }

  unsigned degree_in(const std::string& var) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) {
      auto it = m.find(var);
      if (it != m.end()) d = std::max(d, it->second);
    }
    return d;
  }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) {
      unsigned s = 0;
      for (const auto& [v, e] : m) s += e;
      d = std::max(d, s);
    }
    return d;
  }

  // Coefficient of var^k, as a polynomial in the remaining variables.
  MultiPoly coefficient_of(const std::string& var, unsigned k) const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) {
      auto it = m.find(var);
      const unsigned e = it == m.end() ? 0 : it->second;
      if (e != k) continue;
      Monomial rest = m;
      rest.erase(var);
      r.add_term(rest, c);
    }
    return r;
  }

  // Simultaneous substitution of variables by polynomials.
  MultiPoly substitute(const std::map<std::string, MultiPoly>& values) const {
    if (values.empty()) return *this;
    MultiPoly r;
    std::map<std::pair<std::string, unsigned>, MultiPoly> powers;
    for (const auto& [m, c] : terms_) {
      MultiPoly acc(c);
      Monomial kept;
      for (const auto& [v, e] : m) {
        auto it = values.find(v);
        if (it == values.end()) {
          kept[v] = e;
          continue;
        }
        auto key = std::make_pair(v, e);
        auto pit = powers.find(key);
        if (pit == powers.end()) pit = powers.emplace(key, it->second.pow(e)).first;
        acc *= pit->second;
      }
      if (!kept.empty()) acc *= term(kept, FieldElem(1));
      r += acc;
    }
    return r;
  }

  MultiPoly substitute(const std::string& var, const MultiPoly& value) const {
    return substitute(std::map<std::string, MultiPoly>{{var, value}});
  }

  // Largest monomial dividing every term.
  Monomial monomial_content() const {
    if (terms_.empty()) return {};
    Monomial g = terms_.begin()->first;
    for (const auto& [m, c] : terms_) {
      for (auto it = g.begin(); it != g.end();) {
        auto f = m.find(it->first);
        if (f == m.end()) {
          it = g.erase(it);
        } else {
          it->second = std::min(it->second, f->second);
          ++it;
        }
      }
      if (g.empty()) break;
    }
    return g;
  }

  MultiPoly divided_by(const Monomial& d) const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) {
      Monomial x = m;
      for (const auto& [v, e] : d) {
        auto it = x.find(v);
        it->second -= e;
        if (it->second == 0) x.erase(it);
      }
      r.terms_.emplace(std::move(x), c);
    }
    return r;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [m, c] : a.terms_) {
      if (m != it->first || c != it->second) return false;
      ++it;
    }
    return true;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      FieldElem mag = c;
      if (c.is_negative()) {
        os << (first ? "-" : " - ");
        mag = -c;
      } else if (!first) {
        os << " + ";
      }
      first = false;
      const bool unit = mag.is_one();
      if (m.empty()) {
        os << coefficient_text(mag);
        continue;
      }
      if (!unit) os << coefficient_text(mag) << "*";
      bool first_var = true;
      for (const auto& [v, e] : m) {
        if (!first_var) os << "*";
        first_var = false;
        os << v;
        if (e > 1) os << "^" << e;
      }
    }
    return os.str();
  }

 private:
  Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

}  // namespace laistry
