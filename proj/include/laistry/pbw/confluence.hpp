#pragma once

#include <string>
#include <vector>

#include "laistry/pbw/engine.hpp"
#include "laistry/report.hpp"

namespace laistry {

// Overlap ambiguities a·b·c where both a·b and b·c are rule left-hand sides,
// i.e. strictly decreasing triples in the PBW order.
inline std::vector<Word> overlap_ambiguities(const Engine& e) {
  std::vector<Word> out;
  const auto gens = e.params().generators();
  for (Gen a : gens)
    for (Gen b : gens)
      for (Gen c : gens)
        if (e.is_descent(a, b) && e.is_descent(b, c)) out.push_back(word({a, b, c}));
  return out;
}

// Words of degree between 1 and max_degree over the generators of e.
inline std::vector<Word> words_up_to_degree(const AlgebraParams& p, unsigned max_degree) {
  std::vector<Word> out, frontier{Word{}};
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (const auto& w : frontier)
      for (Gen g : p.generators()) {
        Word v = w;
        v.push_back(static_cast<char>(g));
        if (word_degree(v) <= max_degree) {
          out.push_back(v);
          next.push_back(std::move(v));
        }
      }
    frontier = std::move(next);
  }
  return out;
}

// Diamond-lemma check: both one-step reductions of each overlap reach the same
// normal form. Also checks nf(u·v) = nf(nf(u)·nf(v)) for all splittings of all
// words of degree <= max_degree.
inline Report confluence_check(const Engine& e, unsigned max_degree) {
  Report r;
  r.suite = "confluence";
  for (const Word& w : overlap_ambiguities(e)) {
    const Gen a = at(w, 0), b = at(w, 1), c = at(w, 2);
    const NCPoly left = e.normal_form(e.rule(a, b) * NCPoly::gen(c));
    const NCPoly right = e.normal_form(NCPoly::gen(a) * e.rule(b, c));
    const NCPoly diff = left - right;
    r.add("overlap " + word_dotted(w), diff.is_zero(), diff.is_zero() ? std::string() : "difference " + diff.to_string());
  }
  std::size_t checked = 0;
  std::string bad;
  for (const Word& w : words_up_to_degree(e.params(), max_degree)) {
    const NCPoly whole = e.normal_form(w);
    for (std::size_t s = 1; s < w.size(); ++s) {
      const NCPoly split = e.multiply(e.normal_form(w.substr(0, s)), e.normal_form(w.substr(s)));
      ++checked;
      if (split != whole && bad.empty()) bad = word_dotted(w.substr(0, s)) + " | " + word_dotted(w.substr(s));
    }
  }
  r.add("split consistency up to degree " + std::to_string(max_degree), bad.empty(),
        bad.empty() ? std::to_string(checked) + " splittings" : "mismatch at " + bad);
  return r;
}

}  // namespace laistry
