#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "laistry/pbw/word.hpp"

namespace laistry {

// All PBW monomials x1^m1 x2^m2 z_G^nG ... z_0^n0 of the given degree.
inline std::vector<PBWMonomial> pbw_monomials(unsigned ghost, unsigned degree) {
  std::vector<PBWMonomial> out;
  PBWMonomial m(ghost);
  // Choose exponents of z_G, ..., z_0 first, then split the rest between x1 and x2.
  std::function<void(int, unsigned)> rec = [&](int k, unsigned left) {
    if (k < 0) {
      for (unsigned m1 = 0; m1 <= left; ++m1) {
        m.m1 = m1;
        m.m2 = left - m1;
        out.push_back(m);
      }
      return;
    }
    const unsigned w = static_cast<unsigned>(k) + 1;
    for (unsigned e = 0; e * w <= left; ++e) {
      m.n[static_cast<std::size_t>(k)] = e;
      rec(k - 1, left - e * w);
    }
    m.n[static_cast<std::size_t>(k)] = 0;
  };
  rec(static_cast<int>(ghost), degree);
  return out;
}

// Number of PBW monomials in each degree 0..max_degree.
inline std::vector<std::uint64_t> hilbert_coeffs(unsigned ghost, unsigned max_degree) {
  std::vector<std::uint64_t> out;
  out.reserve(max_degree + 1);
  for (unsigned d = 0; d <= max_degree; ++d) out.push_back(pbw_monomials(ghost, d).size());
  return out;
}

}  // namespace laistry
