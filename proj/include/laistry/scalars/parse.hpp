#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "laistry/errors.hpp"
#include "laistry/scalars/field.hpp"

namespace laistry {

namespace detail {

// Recursive-descent parser for `+ - * / ^ ( )` expressions over integer
// literals and identifiers. The semantics (value type, how identifiers are
// interpreted, what division means) come from the Policy:
//
//   Value literal(const mpz_class&, std::size_t pos);
//   Value identifier(std::string_view name, std::size_t pos);
//   Value divide(const Value&, const Value&, std::size_t pos);
//   Value power(const Value&, long exponent, std::size_t pos);
//
// plus `+`, binary and unary `-` and `*` on Value.
template <class Value, class Policy>
class ExprParser {
 public:
  ExprParser(std::string_view text, Policy& policy) : text_(text), policy_(policy) {}

  Value parse() {
    Value v = expression();
    skip_space();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return v;
  }

 private:
  Value expression() {
    skip_space();
    Value acc = term();
    for (;;) {
      skip_space();
      if (peek('+')) {
        ++pos_;
        acc = acc + term();
      } else if (peek('-')) {
        ++pos_;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Value term() {
    Value acc = unary();
    for (;;) {
      skip_space();
      if (peek('*')) {
        ++pos_;
        acc = acc * unary();
      } else if (peek('/')) {
        const std::size_t at = pos_++;
        Value rhs = unary();
        acc = policy_.divide(acc, rhs, at);
      } else {
        return acc;
      }
    }
  }

  Value unary() {
    skip_space();
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  Value power() {
    Value base = atom();
    skip_space();
    if (!peek('^')) return base;
    const std::size_t at = pos_++;
    skip_space();
    bool negative = false;
    if (peek('-')) {
      negative = true;
      ++pos_;
    } else if (peek('(')) {
      // allow q^(-1)
      ++pos_;
      skip_space();
      if (peek('-')) {
        negative = true;
        ++pos_;
      }
      const long e = integer_exponent();
      skip_space();
      expect(')');
      return policy_.power(base, negative ? -e : e, at);
    }
    const long e = integer_exponent();
    return policy_.power(base, negative ? -e : e, at);
  }

  Value atom() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expression();
      skip_space();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return policy_.literal(mpz_class(std::string(text_.substr(start, pos_ - start))), start);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return policy_.identifier(text_.substr(start, pos_ - start), start);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  long integer_exponent() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer exponent", start);
    if (pos_ - start > 9) throw ParseError("exponent too large", start);
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
  void expect(char c) {
    if (!peek(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  std::string_view text_;
  Policy& policy_;
  std::size_t pos_ = 0;
};

struct ScalarPolicy {
  QSpec spec;

  FieldElem literal(const mpz_class& v, std::size_t) const { return FieldElem(spec, mpq_class(v)); }

  FieldElem identifier(std::string_view name, std::size_t pos) const {
    if (name == "q") return FieldElem::q(spec);
    throw ParseError("unknown symbol '" + std::string(name) + "'", pos);
  }

  FieldElem divide(const FieldElem& a, const FieldElem& b, std::size_t pos) const {
    if (b.is_zero()) throw ParseError("division by zero", pos);
    return a / b;
  }

  FieldElem power(const FieldElem& a, long e, std::size_t pos) const {
    if (e < 0 && a.is_zero()) throw ParseError("negative power of zero", pos);
    return a.pow(e);
  }
};

}  // namespace detail

// Parses the scalar grammar: integers, `a/b`, polynomial expressions in `q`
// with `+ - * ^ ( )` and quotients of them. The result lives in `spec`.
inline FieldElem parse_scalar(std::string_view text, const QSpec& spec = QSpec::generic()) {
  detail::ScalarPolicy policy{spec};
  return detail::ExprParser<FieldElem, detail::ScalarPolicy>(text, policy).parse();
}

}  // namespace laistry
