#pragma once

#include "laistry/scalars/poly.hpp"

namespace laistry {

// Checks sum_{i=0..n} (-1)^i C(n,i)/(t-i) = (-1)^n n!/(t(t-1)...(t-n)) after
// clearing the common denominator t(t-1)...(t-n).
inline bool partial_fraction_identity(unsigned n) {
  if (n == 0) throw InvalidSpec("partial fraction identity needs n >= 1");
  const QPoly t = QPoly::indeterminate();
  QPoly lhs;
  mpz_class binom(1);
  for (unsigned i = 0; i <= n; ++i) {
    QPoly prod(1);
    for (unsigned k = 0; k <= n; ++k)
      if (k != i) prod = prod * (t - QPoly(static_cast<long>(k)));
    const mpq_class c = (i % 2 == 0) ? mpq_class(binom) : mpq_class(-binom);
    lhs += prod.scaled(c);
    binom = binom * (n - i) / (i + 1);
  }
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), n);
  const QPoly rhs(n % 2 == 0 ? mpq_class(fact) : mpq_class(-fact));
  return lhs == rhs;
}

}  // namespace laistry
