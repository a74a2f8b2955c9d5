#pragma once

#include <string>
#include <string_view>

#include "laistry/pbw/ncpoly.hpp"
#include "laistry/scalars/parse.hpp"

namespace laistry {

namespace detail {

struct ElementPolicy {
  const AlgebraParams& params;

  NCPoly literal(const mpz_class& v, std::size_t) const { return NCPoly(FieldElem(params.q, mpq_class(v))); }

  NCPoly identifier(std::string_view name, std::size_t pos) const {
    if (name == "q") return NCPoly(FieldElem::q(params.q));
    if (name == "x1") return x1();
    if (name == "x2") return x2();
    if (name.size() > 1 && name[0] == 'z' && name.find_first_not_of("0123456789", 1) == std::string_view::npos) {
      if (name.size() > 4) throw ParseError("z index too large", pos);
      const unsigned n = static_cast<unsigned>(std::stoul(std::string(name.substr(1))));
      if (n > params.ghost)
        throw ParseError("z" + std::to_string(n) + " exceeds ghost " + std::to_string(params.ghost), pos);
      return zn(n);
    }
    throw ParseError("unknown symbol '" + std::string(name) + "'", pos);
  }

  NCPoly divide(const NCPoly& a, const NCPoly& b, std::size_t pos) const {
    if (!b.is_scalar()) throw ParseError("can only divide by scalars", pos);
    if (b.is_zero()) throw ParseError("division by zero", pos);
    return a.scaled(b.scalar_part().inverse());
  }

  NCPoly power(const NCPoly& a, long e, std::size_t pos) const {
    if (e >= 0) return a.pow(static_cast<unsigned>(e));
    if (!a.is_scalar() || a.is_zero()) throw ParseError("negative power of a non-invertible element", pos);
    return NCPoly(a.scalar_part().pow(e));
  }
};

}  // namespace detail

// Parses an element of the free algebra, e.g. `x2*x1 - x1*x2 + (1/2)*x1^2`.
inline NCPoly parse_element(std::string_view text, const AlgebraParams& params) {
  detail::ElementPolicy policy{params};
  return detail::ExprParser<NCPoly, detail::ElementPolicy>(text, policy).parse();
}

}  // namespace laistry
