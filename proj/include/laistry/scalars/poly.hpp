#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "laistry/errors.hpp"

namespace laistry {

// Dense univariate polynomial over Q. Coefficients are stored from the
// constant term upwards; the zero polynomial has no coefficients.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(const mpq_class& c) {
    if (c != 0) {
      coeffs_.push_back(c);
      coeffs_.back().canonicalize();
    }
  }
  explicit QPoly(long c) : QPoly(mpq_class(c)) {}

  static QPoly from_coeffs(std::vector<mpq_class> coeffs) {
    QPoly p;
    p.coeffs_ = std::move(coeffs);
    for (auto& c : p.coeffs_) c.canonicalize();
    p.trim();
    return p;
  }

  static QPoly monomial(const mpq_class& c, std::size_t k) {
    QPoly p;
    if (c == 0) return p;
    p.coeffs_.assign(k + 1, mpq_class(0));
    p.coeffs_[k] = c;
    p.coeffs_[k].canonicalize();
    return p;
  }

  // q itself.
  static QPoly indeterminate() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_constant() const { return coeffs_.size() <= 1; }

  const mpq_class& operator[](std::size_t i) const {
    static const mpq_class zero(0);
    return i < coeffs_.size() ? coeffs_[i] : zero;
  }
  const mpq_class& leading() const { return (*this)[coeffs_.empty() ? 0 : coeffs_.size() - 1]; }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }

  // Index of the lowest nonzero coefficient (0 for the zero polynomial).
  std::size_t low_order() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return i;
    return 0;
  }

  bool is_monomial() const { return !is_zero() && low_order() == coeffs_.size() - 1; }

  QPoly operator-() const {
    QPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  QPoly& operator+=(const QPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), mpq_class(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  QPoly& operator-=(const QPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), mpq_class(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }

  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpq_class> out(a.coeffs_.size() + b.coeffs_.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return from_coeffs(std::move(out));
  }

  QPoly scaled(const mpq_class& c) const {
    if (c == 0) return {};
    QPoly r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
  }

  // Multiply by q^k.
  QPoly shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    QPoly r;
    r.coeffs_.assign(k, mpq_class(0));
    r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return r;
  }

  // Exact division by q^k; requires low_order() >= k.
  QPoly lowered(std::size_t k) const {
    if (k == 0 || is_zero()) return *this;
    QPoly r;
    r.coeffs_.assign(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end());
    return r;
  }

  QPoly monic() const { return is_zero() ? *this : scaled(1 / leading()); }

  static void divmod(const QPoly& a, const QPoly& b, QPoly& quo, QPoly& rem) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    quo = QPoly();
    rem = a;
    if (rem.degree() < b.degree()) return;
    std::vector<mpq_class> qc(static_cast<std::size_t>(rem.degree() - b.degree() + 1), mpq_class(0));
    const mpq_class inv_lead = 1 / b.leading();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
      const std::size_t shift = static_cast<std::size_t>(rem.degree() - b.degree());
      const mpq_class factor = rem.leading() * inv_lead;
      qc[shift] = factor;
      for (std::size_t i = 0; i < b.coeffs_.size(); ++i) rem.coeffs_[i + shift] -= factor * b.coeffs_[i];
      rem.trim();
    }
    quo = from_coeffs(std::move(qc));
  }

  friend QPoly operator%(const QPoly& a, const QPoly& b) {
    QPoly quo, rem;
    divmod(a, b, quo, rem);
    return rem;
  }

  // Exact quotient; the caller guarantees b divides a.
  static QPoly exact_div(const QPoly& a, const QPoly& b) {
    QPoly quo, rem;
    divmod(a, b, quo, rem);
    return quo;
  }

  // Monic gcd; gcd(0, 0) = 0.
  static QPoly gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
      QPoly r = a % b;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  // Returns g = gcd(a, m) (monic) and s with s*a = g (mod m).
  static std::pair<QPoly, QPoly> ext_gcd(const QPoly& a, const QPoly& m) {
    QPoly r0 = m, r1 = a % m, s0, s1(mpq_class(1));
    while (!r1.is_zero()) {
      QPoly quo, rem;
      divmod(r0, r1, quo, rem);
      QPoly s2 = s0 - quo * s1;
      r0 = std::move(r1);
      r1 = std::move(rem);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    if (r0.is_zero()) return {r0, QPoly()};
    const mpq_class inv = 1 / r0.leading();
    return {r0.scaled(inv), (s0 % m).scaled(inv)};
  }

  mpq_class eval(const mpq_class& x) const {
    mpq_class acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
  }

  QPoly pow(unsigned e) const {
    QPoly result(mpq_class(1)), base = *this;
    while (e) {
      if (e & 1u) result = result * base;
      e >>= 1u;
      if (e) base = base * base;
    }
    return result;
  }

  friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<mpq_class> coeffs_;
};

// n-th cyclotomic polynomial, built from q^n - 1 = prod_{d | n} Phi_d.
inline QPoly cyclotomic(unsigned n) {
  QPoly p = QPoly::monomial(1, n) - QPoly(1);
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) p = QPoly::exact_div(p, cyclotomic(d));
  return p;
}

// Integer representation of the fraction num/den: both sides scaled to
// coprime integer coefficients with a positive leading denominator coefficient.
struct IntegerFraction {
  std::vector<mpz_class> num;  // low to high
  std::vector<mpz_class> den;
};

inline IntegerFraction integer_fraction(const QPoly& num, const QPoly& den) {
  mpz_class l(1);
  for (const auto& c : num.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& c : den.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  IntegerFraction out;
  mpz_class g(0);
  auto convert = [&](const QPoly& p, std::vector<mpz_class>& dst) {
    for (const auto& c : p.coeffs()) {
      mpq_class scaled = c * l;
      dst.push_back(scaled.get_num());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), dst.back().get_mpz_t());
    }
  };
  convert(num, out.num);
  convert(den, out.den);
  if (!out.den.empty() && out.den.back() < 0) g = -g;
  if (g != 0 && g != 1) {
    for (auto& c : out.num) c /= g;
    for (auto& c : out.den) c /= g;
  }
  return out;
}

}  // namespace laistry
