#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>

#include "laistry/errors.hpp"
#include "laistry/scalars/poly.hpp"

namespace laistry {

// How the parameter q is realized: as an indeterminate, as a primitive N-th
// root of unity (arithmetic in Q[q]/Phi_N), or as a nonzero rational number.
class QSpec {
 public:
  enum class Kind { Generic, RootOfUnity, Numeric };

  QSpec() = default;

  static QSpec generic() { return QSpec(); }

  static QSpec root_of_unity(unsigned order) {
    if (order < 2) throw InvalidSpec("root of unity order must be at least 2");
    QSpec s;
    s.kind_ = Kind::RootOfUnity;
    s.order_ = order;
    s.modulus_ = std::make_shared<const QPoly>(cyclotomic(order));
    return s;
  }

  static QSpec numeric(const mpq_class& value) {
    if (value == 0) throw InvalidSpec("q must be nonzero");
    QSpec s;
    s.kind_ = Kind::Numeric;
    s.value_ = value;
    s.value_.canonicalize();
    return s;
  }

  // Accepts `generic`, `root:N` and `num:a/b` (also `num:a`).
  static QSpec parse(std::string_view text) {
    if (text == "generic") return generic();
    if (text.substr(0, 5) == "root:") {
      const std::string digits(text.substr(5));
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw InvalidSpec("malformed root-of-unity order in '" + std::string(text) + "'");
      return root_of_unity(static_cast<unsigned>(std::stoul(digits)));
    }
    if (text.substr(0, 4) == "num:") {
      mpq_class v;
      if (v.set_str(std::string(text.substr(4)), 10) != 0)
        throw InvalidSpec("malformed rational in '" + std::string(text) + "'");
      v.canonicalize();
      return numeric(v);
    }
    throw InvalidSpec("unknown q specification '" + std::string(text) + "' (expected generic, root:N or num:a/b)");
  }

  Kind kind() const { return kind_; }
  bool is_generic() const { return kind_ == Kind::Generic; }
  bool is_specialized() const { return kind_ != Kind::Generic; }
  unsigned order() const { return order_; }
  const mpq_class& value() const { return value_; }
  const QPoly& modulus() const { return *modulus_; }

  // True when q is a root of unity of order at most `max_order`
  // (q = 1 counts as order 1, q = -1 as order 2).
  bool is_root_of_unity_up_to(unsigned max_order) const {
    switch (kind_) {
      case Kind::Generic: return false;
      case Kind::RootOfUnity: return order_ <= max_order;
      case Kind::Numeric:
        if (value_ == 1) return true;
        if (value_ == -1) return max_order >= 2;
        return false;
    }
    return false;
  }

  std::string to_string() const {
    switch (kind_) {
      case Kind::Generic: return "generic";
      case Kind::RootOfUnity: return "root:" + std::to_string(order_);
      case Kind::Numeric: return "num:" + value_.get_str();
    }
    return {};
  }

  friend bool operator==(const QSpec& a, const QSpec& b) {
    if (a.kind_ != b.kind_) return false;
    switch (a.kind_) {
      case Kind::Generic: return true;
      case Kind::RootOfUnity: return a.order_ == b.order_;
      case Kind::Numeric: return a.value_ == b.value_;
    }
    return false;
  }
  friend bool operator!=(const QSpec& a, const QSpec& b) { return !(a == b); }

 private:
  Kind kind_ = Kind::Generic;
  unsigned order_ = 0;
  mpq_class value_{0};
  std::shared_ptr<const QPoly> modulus_;
};

// Exact scalar: a rational function in q, realized according to its QSpec.
//
// Canonical form (so structural equality is mathematical equality):
//   Generic      num/den coprime over Q, den monic; zero is 0/1.
//   RootOfUnity  den = 1 and deg num < phi(N).
//   Numeric      num constant, den = 1.
// Generic values combine freely with specialized ones (they are specialized
// first); two different specializations never mix.
class FieldElem {
 public:
  FieldElem() : den_(mpq_class(1)) {}
  explicit FieldElem(QSpec spec) : spec_(std::move(spec)), den_(mpq_class(1)) {}
  FieldElem(QSpec spec, const mpq_class& c) : spec_(std::move(spec)), num_(c), den_(mpq_class(1)) {}
  FieldElem(const mpq_class& c) : num_(c), den_(mpq_class(1)) {}  // NOLINT: rationals embed implicitly
  FieldElem(long c) : FieldElem(mpq_class(c)) {}                   // NOLINT
  FieldElem(int c) : FieldElem(mpq_class(c)) {}                    // NOLINT

  static FieldElem q(const QSpec& spec) {
    return from_fraction(spec, QPoly::indeterminate(), QPoly(1));
  }

  static FieldElem from_fraction(const QSpec& spec, QPoly num, QPoly den) {
    FieldElem r(spec);
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    r.canonicalize();
    return r;
  }

  const QSpec& spec() const { return spec_; }
  const QPoly& numerator() const { return num_; }
  const QPoly& denominator() const { return den_; }
  IntegerFraction integer_form() const { return integer_fraction(num_, den_); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_constant() && den_.is_constant() && num_[0] == den_[0]; }
  // No dependence on q (always true for Numeric values).
  bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
  std::optional<mpq_class> as_rational() const {
    if (!is_rational()) return std::nullopt;
    return num_[0] / den_[0];
  }

  FieldElem specialize(const QSpec& target) const {
    if (spec_ == target) return *this;
    if (!spec_.is_generic()) throw ModeMismatch("cannot respecialize " + spec_.to_string() + " to " + target.to_string());
    return from_fraction(target, num_, den_);
  }

  FieldElem inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    switch (spec_.kind()) {
      case QSpec::Kind::Generic:
      case QSpec::Kind::Numeric: return from_fraction(spec_, den_, num_);
      case QSpec::Kind::RootOfUnity: {
        auto [g, s] = QPoly::ext_gcd(num_, spec_.modulus());
        if (g.degree() != 0) throw NonInvertible("element not invertible modulo the cyclotomic polynomial");
        FieldElem r(spec_);
        r.num_ = std::move(s);
        return r;
      }
    }
    return *this;
  }

  FieldElem pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElem result = one_like(), base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
      if (k & 1u) result *= base;
      k >>= 1u;
      if (k) base *= base;
    }
    return result;
  }

  FieldElem one_like() const { return FieldElem(spec_, mpq_class(1)); }
  FieldElem zero_like() const { return FieldElem(spec_); }

  FieldElem operator-() const {
    FieldElem r = *this;
    r.num_ = -r.num_;
    return r;
  }

  FieldElem& operator+=(const FieldElem& o) { return *this = add(*this, o, false); }
  FieldElem& operator-=(const FieldElem& o) { return *this = add(*this, o, true); }
  FieldElem& operator*=(const FieldElem& o) { return *this = mul(*this, o); }
  FieldElem& operator/=(const FieldElem& o) { return *this = mul(*this, o.inverse()); }

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b) { return add(a, b, false); }
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b) { return add(a, b, true); }
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b) { return mul(a, b); }
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b) { return mul(a, b.inverse()); }

  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    if (a.spec_ == b.spec_) return a.num_ == b.num_ && a.den_ == b.den_;
    try {
      const QSpec s = common_spec(a.spec_, b.spec_);
      const FieldElem x = a.specialize(s), y = b.specialize(s);
      return x.num_ == y.num_ && x.den_ == y.den_;
    } catch (const Error&) {
      return false;
    }
  }
  friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

  // Sign used for printing: the sign of the leading integer numerator coefficient.
  bool is_negative() const { return !num_.is_zero() && num_.leading() < 0; }

  std::string to_string() const {
    const IntegerFraction f = integer_form();
    const std::string n = poly_string(f.num);
    if (f.den.size() == 1 && f.den[0] == 1) return n;
    const std::string d = poly_string(f.den);
    const bool wrap_num = f.num.size() > 1 && term_count(f.num) > 1;
    const bool wrap_den = !is_atomic(f.den);
    return (wrap_num ? "(" + n + ")" : n) + "/" + (wrap_den ? "(" + d + ")" : d);
  }

  static QSpec common_spec(const QSpec& a, const QSpec& b) {
    if (a == b) return a;
    if (a.is_generic()) return b;
    if (b.is_generic()) return a;
    throw ModeMismatch("cannot combine scalars specialized as " + a.to_string() + " and " + b.to_string());
  }

 private:
  static FieldElem add(const FieldElem& a, const FieldElem& b, bool subtract) {
    if (a.spec_ != b.spec_) {
      const QSpec s = common_spec(a.spec_, b.spec_);
      return add(a.specialize(s), b.specialize(s), subtract);
    }
    FieldElem r(a.spec_);
    if (a.den_ == b.den_) {
      r.num_ = subtract ? a.num_ - b.num_ : a.num_ + b.num_;
      r.den_ = a.den_;
    } else {
      QPoly t = b.num_ * a.den_;
      r.num_ = a.num_ * b.den_;
      if (subtract) r.num_ -= t;
      else r.num_ += t;
      r.den_ = a.den_ * b.den_;
    }
    r.canonicalize();
    return r;
  }

  static FieldElem mul(const FieldElem& a, const FieldElem& b) {
    if (a.spec_ != b.spec_) {
      const QSpec s = common_spec(a.spec_, b.spec_);
      return mul(a.specialize(s), b.specialize(s));
    }
    FieldElem r(a.spec_);
    if (a.is_zero() || b.is_zero()) return r;
    r.num_ = a.num_ * b.num_;
    r.den_ = a.den_ * b.den_;
    r.canonicalize();
    return r;
  }

  void canonicalize() {
    if (den_.is_zero()) throw DivisionByZero("zero denominator");
    switch (spec_.kind()) {
      case QSpec::Kind::Numeric: {
        const mpq_class d = den_.eval(spec_.value());
        if (d == 0) throw DivisionByZero("denominator vanishes at q = " + spec_.value().get_str());
        num_ = QPoly(num_.eval(spec_.value()) / d);
        den_ = QPoly(mpq_class(1));
        return;
      }
      case QSpec::Kind::RootOfUnity: {
        const QPoly& m = spec_.modulus();
        if (num_.degree() >= m.degree()) num_ = num_ % m;
        if (den_.is_constant()) {
          if (den_[0] != 1) num_ = num_.scaled(1 / den_[0]);
        } else {
          const QPoly d = den_ % m;
          if (d.is_zero()) throw NonInvertible("denominator vanishes modulo the cyclotomic polynomial");
          auto [g, s] = QPoly::ext_gcd(d, m);
          if (g.degree() != 0) throw NonInvertible("denominator not invertible modulo the cyclotomic polynomial");
          num_ = (num_ * s) % m;
        }
        den_ = QPoly(mpq_class(1));
        return;
      }
      case QSpec::Kind::Generic: {
        if (num_.is_zero()) {
          den_ = QPoly(mpq_class(1));
          return;
        }
        if (den_.is_monomial()) {
          const std::size_t k = static_cast<std::size_t>(den_.degree());
          const std::size_t common = std::min(k, num_.low_order());
          const mpq_class lead = den_.leading();
          num_ = num_.lowered(common);
          den_ = QPoly::monomial(1, k - common);
          if (lead != 1) num_ = num_.scaled(1 / lead);
          return;
        }
        const QPoly g = QPoly::gcd(num_, den_);
        if (g.degree() > 0) {
          num_ = QPoly::exact_div(num_, g);
          den_ = QPoly::exact_div(den_, g);
        }
        const mpq_class lead = den_.leading();
        if (lead != 1) {
          num_ = num_.scaled(1 / lead);
          den_ = den_.scaled(1 / lead);
        }
        return;
      }
    }
  }

  static std::size_t term_count(const std::vector<mpz_class>& p) {
    std::size_t n = 0;
    for (const auto& c : p) n += (c != 0);
    return n;
  }

  // Integer, q or q^k: safe to print without parentheses as a denominator.
  static bool is_atomic(const std::vector<mpz_class>& p) {
    if (term_count(p) != 1) return false;
    if (p.size() == 1) return p[0] > 0;
    return p.back() == 1;
  }

  static std::string poly_string(const std::vector<mpz_class>& p) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = p.size(); i-- > 0;) {
      const mpz_class& c = p[i];
      if (c == 0) continue;
      mpz_class mag = abs(c);
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (i == 0) {
        os << mag.get_str();
        continue;
      }
      if (mag != 1) os << mag.get_str() << "*";
      os << "q";
      if (i > 1) os << "^" << i;
    }
    return os.str();
  }

  QSpec spec_;
  QPoly num_;
  QPoly den_;

};

inline std::ostream& operator<<(std::ostream& os, const FieldElem& x) { return os << x.to_string(); }

// Coefficient as printed in front of a monomial: integers and single terms
// like `2*q^3` stand alone, anything else is parenthesized.
inline std::string coefficient_text(const FieldElem& c) {
  const IntegerFraction f = c.integer_form();
  std::size_t terms = 0;
  for (const auto& x : f.num) terms += (x != 0);
  const bool bare = f.den.size() == 1 && f.den[0] == 1 && terms <= 1;
  return bare ? c.to_string() : "(" + c.to_string() + ")";
}

// Exact binomial coefficient as a scalar (0 when k > n).
inline FieldElem binomial(unsigned n, unsigned k) {
  if (k > n) return FieldElem(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return FieldElem(mpq_class(r));
}

}  // namespace laistry
