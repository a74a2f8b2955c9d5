#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "laistry/errors.hpp"
#include "laistry/scalars/field.hpp"

namespace laistry {

// Generators are small integer codes: x1 = 0, x2 = 1, z_n = 2 + n.
using Gen = std::uint8_t;

constexpr Gen X1 = 0;
constexpr Gen X2 = 1;
constexpr Gen z(unsigned n) { return static_cast<Gen>(2 + n); }

inline bool is_z(Gen g) { return g >= 2; }
inline unsigned z_index(Gen g) { return static_cast<unsigned>(g) - 2; }

// Degree grading: deg x1 = deg x2 = 1, deg z_n = n + 1.
inline unsigned weight(Gen g) { return g < 2 ? 1u : static_cast<unsigned>(g) - 1; }

// Position in the PBW order x1 < x2 < z_G < ... < z_1 < z_0. Independent of G,
// so words keep their meaning when moved between algebras with different G.
inline unsigned pbw_rank(Gen g) { return g < 2 ? g : 255u - z_index(g); }

inline std::string gen_name(Gen g) {
  if (g == X1) return "x1";
  if (g == X2) return "x2";
  return "z" + std::to_string(z_index(g));
}

// A word in the free monoid, one char per generator code; the empty word is 1.
using Word = std::string;

inline Word word(std::initializer_list<Gen> gens) {
  Word w;
  for (Gen g : gens) w.push_back(static_cast<char>(g));
  return w;
}
inline Gen at(const Word& w, std::size_t i) { return static_cast<Gen>(w[i]); }

inline unsigned word_degree(const Word& w) {
  unsigned d = 0;
  for (char c : w) d += weight(static_cast<Gen>(c));
  return d;
}

inline bool is_pbw_ordered(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (pbw_rank(at(w, i - 1)) > pbw_rank(at(w, i))) return false;
  return true;
}

inline std::string word_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += "*";
    out += gen_name(at(w, i));
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

// Dotted spelling used in reports, e.g. "z0·x2·x1".
inline std::string word_dotted(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += "·";
    out += gen_name(at(w, i));
  }
  return out.empty() ? "1" : out;
}

constexpr unsigned kMaxGhost = 64;

struct AlgebraParams {
  unsigned ghost = 1;
  QSpec q;

  AlgebraParams() = default;
  AlgebraParams(unsigned g, QSpec spec) : ghost(g), q(std::move(spec)) { validate(); }

  void validate() const {
    if (ghost < 1) throw InvalidSpec("ghost must be at least 1");
    if (ghost > kMaxGhost) throw InvalidSpec("ghost larger than " + std::to_string(kMaxGhost) + " is not supported");
  }

  unsigned generator_count() const { return ghost + 3; }
  bool contains(Gen g) const { return g < generator_count(); }

  std::vector<Gen> generators() const {
    std::vector<Gen> out;
    for (unsigned g = 0; g < generator_count(); ++g) out.push_back(static_cast<Gen>(g));
    return out;
  }

  void check_word(const Word& w) const {
    for (char c : w)
      if (!contains(static_cast<Gen>(c)))
        throw IndexOutOfRange("generator " + gen_name(static_cast<Gen>(c)) + " does not exist for ghost " +
                              std::to_string(ghost));
  }
};

// Exponents of x1^m1 x2^m2 z_G^{n_G} ... z_0^{n_0}; n[k] is the exponent of z_k.
struct PBWMonomial {
  unsigned m1 = 0;
  unsigned m2 = 0;
  std::vector<unsigned> n;

  explicit PBWMonomial(unsigned ghost = 1) : n(ghost + 1, 0) {}

  unsigned degree() const {
    unsigned d = m1 + m2;
    for (std::size_t k = 0; k < n.size(); ++k) d += static_cast<unsigned>(k + 1) * n[k];
    return d;
  }

  Word to_word() const {
    Word w(m1, static_cast<char>(X1));
    w.append(m2, static_cast<char>(X2));
    for (std::size_t k = n.size(); k-- > 0;) w.append(n[k], static_cast<char>(z(static_cast<unsigned>(k))));
    return w;
  }

  static PBWMonomial from_word(const Word& w, unsigned ghost) {
    if (!is_pbw_ordered(w)) throw InvalidSpec("word " + word_string(w) + " is not PBW-ordered");
    PBWMonomial m(ghost);
    for (char c : w) {
      const Gen g = static_cast<Gen>(c);
      if (g == X1) ++m.m1;
      else if (g == X2) ++m.m2;
      else {
        if (z_index(g) > ghost) throw IndexOutOfRange("z index exceeds ghost");
        ++m.n[z_index(g)];
      }
    }
    return m;
  }

  friend bool operator==(const PBWMonomial& a, const PBWMonomial& b) {
    return a.m1 == b.m1 && a.m2 == b.m2 && a.n == b.n;
  }
};

}  // namespace laistry
