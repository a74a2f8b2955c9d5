#pragma once

#include <string>

#include "laistry/pbw/engine.hpp"
#include "laistry/report.hpp"

namespace laistry {

// z_n written in x2 and z0 alone: sum_k C(n,k) (-q)^k x2^(n-k) z0 x2^k.
inline NCPoly z_via_x2_z0(const FieldElem& q, unsigned n) {
  NCPoly out;
  for (unsigned k = 0; k <= n; ++k)
    out += (x2().pow(n - k) * zn(0) * x2().pow(k)).scaled(binomial(n, k) * (-q).pow(k));
  return out;
}

// x1 x2^j - (x2 + x1/2)^j x1
inline NCPoly jordan_power_identity(const Engine& e, unsigned j) {
  return x1() * x2().pow(j) - (x2() + x1().scaled(e.scalar(mpq_class(1, 2)))).pow(j) * x1();
}

// z_{G-1} x2^j - q^-j x2^j z_{G-1} + j q^-j x2^(j-1) z_G
inline NCPoly top_commutation_identity(const Engine& e, unsigned j) {
  const unsigned G = e.ghost();
  const FieldElem qj = e.q_pow(-static_cast<long>(j));
  return zn(G - 1) * x2().pow(j) - (x2().pow(j) * zn(G - 1)).scaled(qj) +
         (x2().pow(j - 1) * zn(G)).scaled(qj * FieldElem(static_cast<long>(j)));
}

// sum_i C(G+1,i) (-q)^i x2^(G+1-i) z0 x2^i, which is z_{G+1} = 0 in disguise.
inline NCPoly vanishing_binomial_identity(const Engine& e) { return z_via_x2_z0(e.q(), e.ghost() + 1); }

inline Report verify_derived_identities(const Engine& e, unsigned jmax) {
  Report r;
  r.suite = "derived_identities";
  auto check = [&](const std::string& name, const NCPoly& p) {
    const NCPoly nf = e.normal_form(p);
    r.add(name, nf.is_zero(), nf.is_zero() ? std::string() : "normal form " + nf.to_string());
  };
  const unsigned G = e.ghost();
  for (unsigned j = 1; j <= jmax; ++j) check("jordan_power(" + std::to_string(j) + ")", jordan_power_identity(e, j));
  for (const auto& rel : e.derived_relations()) check(rel.name, rel.poly);
  for (unsigned j = 1; j <= jmax; ++j)
    check("top_commutation(" + std::to_string(j) + ")", top_commutation_identity(e, j));
  check("vanishing_binomial", vanishing_binomial_identity(e));
  for (unsigned n = 1; n <= G; ++n) check("z_expansion(" + std::to_string(n) + ")", zn(n) - z_via_x2_z0(e.q(), n));
  return r;
}

}  // namespace laistry
