#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "laistry/pbw/word.hpp"
#include "laistry/scalars/field.hpp"

namespace laistry {

// Element of the free algebra on x1, x2, z_0, z_1, ...: a finite linear
// combination of words. Multiplication is concatenation; straightening into
// the PBW basis is the Engine's job.
class NCPoly {
 public:
  using Terms = std::map<Word, FieldElem>;

  NCPoly() = default;
  NCPoly(const FieldElem& c) {  // NOLINT: scalars embed implicitly
    if (!c.is_zero()) terms_.emplace(Word{}, c);
  }
  NCPoly(long c) : NCPoly(FieldElem(c)) {}  // NOLINT
  NCPoly(int c) : NCPoly(FieldElem(c)) {}   // NOLINT

  static NCPoly gen(Gen g) { return monomial(word({g}), FieldElem(1)); }
  static NCPoly monomial(const Word& w, const FieldElem& c = FieldElem(1)) {
    NCPoly p;
    if (!c.is_zero()) p.terms_.emplace(w, c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
  FieldElem coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? FieldElem(0) : it->second;
  }
  FieldElem scalar_part() const { return coefficient(Word{}); }

  void add_term(const Word& w, const FieldElem& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  NCPoly operator-() const {
    NCPoly r = *this;
    for (auto& [w, c] : r.terms_) c = -c;
    return r;
  }
  NCPoly& operator+=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  NCPoly& operator-=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }

  friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly r;
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) r.add_term(wa + wb, ca * cb);
    return r;
  }
  NCPoly& operator*=(const NCPoly& o) { return *this = *this * o; }

  NCPoly scaled(const FieldElem& c) const {
    if (c.is_zero()) return {};
    NCPoly r = *this;
    for (auto& [w, x] : r.terms_) x *= c;
    return r;
  }

  NCPoly pow(unsigned e) const {
    NCPoly r(1);
    for (unsigned i = 0; i < e; ++i) r *= *this;
    return r;
  }

  // Largest degree of a word present (0 for scalars and for zero).
  unsigned degree() const {
    unsigned d = 0;
    for (const auto& [w, c] : terms_) d = std::max(d, word_degree(w));
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const unsigned d = word_degree(terms_.begin()->first);
    for (const auto& [w, c] : terms_)
      if (word_degree(w) != d) return false;
    return true;
  }

  bool is_pbw() const {
    for (const auto& [w, c] : terms_)
      if (!is_pbw_ordered(w)) return false;
    return true;
  }

  // Applies a substitution to every generator of every word.
  template <class F>
  NCPoly map_generators(F&& image) const {
    NCPoly r;
    for (const auto& [w, c] : terms_) {
      NCPoly t(c);
      for (char g : w) t *= image(static_cast<Gen>(g));
      r += t;
    }
    return r;
  }

  template <class Keep>
  NCPoly filtered(Keep&& keep) const {
    NCPoly r;
    for (const auto& [w, c] : terms_)
      if (keep(w)) r.terms_.emplace(w, c);
    return r;
  }

  friend bool operator==(const NCPoly& a, const NCPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [w, c] : a.terms_) {
      if (w != it->first || c != it->second) return false;
      ++it;
    }
    return true;
  }
  friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

  // Words ordered for printing: higher degree first, then longer words, then
  // lexicographically larger in the PBW ranks.
  std::vector<std::pair<Word, FieldElem>> ordered_terms() const {
    std::vector<std::pair<Word, FieldElem>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return print_before(a.first, b.first); });
    return v;
  }

  static bool print_before(const Word& a, const Word& b) {
    const unsigned da = word_degree(a), db = word_degree(b);
    if (da != db) return da > db;
    if (a.size() != b.size()) return a.size() > b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      const unsigned ra = pbw_rank(at(a, i)), rb = pbw_rank(at(b, i));
      if (ra != rb) return ra > rb;
    }
    return false;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : ordered_terms()) {
      FieldElem mag = c;
      if (c.is_negative()) {
        os << (first ? "-" : " - ");
        mag = -c;
      } else if (!first) {
        os << " + ";
      }
      first = false;
      if (w.empty()) {
        os << coefficient_text(mag);
        continue;
      }
      if (!mag.is_one()) os << coefficient_text(mag) << "*";
      os << word_string(w);
    }
    return os.str();
  }

 private:
  Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const NCPoly& p) { return os << p.to_string(); }

inline NCPoly x1() { return NCPoly::gen(X1); }
inline NCPoly x2() { return NCPoly::gen(X2); }
inline NCPoly zn(unsigned n) { return NCPoly::gen(z(n)); }

}  // namespace laistry
