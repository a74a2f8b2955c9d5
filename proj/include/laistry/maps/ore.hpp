#pragma once

#include <optional>
#include <string>
#include <vector>

#include "laistry/errors.hpp"
#include "laistry/pbw/engine.hpp"
#include "laistry/report.hpp"

namespace laistry {

// One step of the Ore tower. The top stage adjoins z_G to k<x1, x2>; stage j
// (0 <= j <= G-1) adjoins z_j to R = k<x1, x2, z_G, ..., z_{j+1}>.
struct OreStage {
  bool top = false;
  unsigned j = 0;

  static OreStage top_stage() { return {true, 0}; }
  static OreStage stage(unsigned j) { return {false, j}; }

  std::string name(unsigned ghost) const {
    return top ? "stage z" + std::to_string(ghost) + " (top)" : "stage z" + std::to_string(j);
  }
};

inline std::vector<OreStage> ore_stages(unsigned ghost) {
  std::vector<OreStage> out{OreStage::top_stage()};
  for (unsigned j = ghost; j-- > 0;) out.push_back(OreStage::stage(j));
  return out;
}

// sigma, delta and the relations of the base ring R for one stage.
class OreData {
 public:
  OreData(const Engine& e, OreStage s) : e_(e), s_(s) {
    const unsigned G = e.ghost();
    if (!s.top && s.j >= G) throw IndexOutOfRange("Ore stage index must lie in [0, G-1]");
    base_ = {X1, X2};
    if (!s.top)
      for (unsigned i = G; i > s.j; --i) base_.push_back(z(i));
    adjoined_ = s.top ? z(G) : z(s.j);
  }

  Gen adjoined() const { return adjoined_; }
  const std::vector<Gen>& base_generators() const { return base_; }

  NCPoly sigma(Gen g) const {
    if (g == X1 || g == X2) return NCPoly::gen(g).scaled(e_.qinv());
    if (s_.top) throw InvalidSpec("sigma of the top stage is defined on x1, x2 only");
    return NCPoly::gen(g).scaled(e_.q_pow(static_cast<long>(s_.j) - static_cast<long>(z_index(g))));
  }

  NCPoly delta(Gen g) const {
    if (!s_.top && g == X2) return zn(s_.j + 1).scaled(-e_.qinv());
    return NCPoly();
  }

  NCPoly sigma(const NCPoly& p) const {
    return p.map_generators([&](Gen g) { return sigma(g); });
  }

  // delta(g1...gk) = sum_i sigma(g1...g_{i-1}) delta(g_i) g_{i+1}...g_k
  NCPoly delta(const NCPoly& p) const {
    NCPoly out;
    for (const auto& [w, c] : p.terms()) {
      NCPoly prefix(c);
      for (std::size_t i = 0; i < w.size(); ++i) {
        const Gen g = at(w, i);
        out += prefix * delta(g) * NCPoly::monomial(w.substr(i + 1));
        prefix *= sigma(g);
      }
    }
    return out;
  }

  // Defining relations of R among its own generators.
  std::vector<NamedRelation> base_relations() const {
    const unsigned G = e_.ghost();
    std::vector<NamedRelation> out;
    out.push_back({"jordan", x2() * x1() - x1() * x2() + (x1() * x1()).scaled(e_.scalar(mpq_class(1, 2)))});
    if (s_.top) return out;
    const unsigned lo = s_.j + 1;
    for (unsigned i = lo; i <= G; ++i)
      out.push_back({"x1_z(" + std::to_string(i) + ")", x1() * zn(i) - (zn(i) * x1()).scaled(e_.q())});
    for (unsigned i = lo; i <= G; ++i)
      for (unsigned k = i + 1; k <= G; ++k)
        out.push_back({"z_z(" + std::to_string(i) + "," + std::to_string(k) + ")",
                       zn(i) * zn(k) -
                           (zn(k) * zn(i)).scaled(e_.q_pow(static_cast<long>(i) - static_cast<long>(k)))});
    for (unsigned i = lo; i < G; ++i)
      out.push_back({"x2_z(" + std::to_string(i) + ")", x2() * zn(i) - (zn(i) * x2()).scaled(e_.q()) - zn(i + 1)});
    out.push_back({"x2_zG", x2() * zn(G) - (zn(G) * x2()).scaled(e_.q())});
    return out;
  }

 private:
  const Engine& e_;
  OreStage s_;
  std::vector<Gen> base_;
  Gen adjoined_ = 0;
};

// Checks that sigma is an endomorphism of R (it is diagonal on generators with
// invertible scalars, hence an automorphism), that delta is a well-defined
// (sigma, 1)-derivation, and that X r = sigma(r) X + delta(r) for generators r.
inline Report ore_verify(const Engine& e, OreStage s) {
  Report r;
  r.suite = "ore " + s.name(e.ghost());
  const OreData d(e, s);
  auto zero = [&](const NCPoly& p) { return e.normal_form(p); };
  auto add = [&](const std::string& name, const NCPoly& nf) {
    r.add(name, nf.is_zero(), nf.is_zero() ? std::string() : "normal form " + nf.to_string());
  };
  for (const auto& rel : d.base_relations()) {
    add("sigma preserves " + rel.name, zero(d.sigma(rel.poly)));
    add("delta kills " + rel.name, zero(d.delta(rel.poly)));
  }
  for (Gen a : d.base_generators())
    for (Gen b : d.base_generators()) {
      const NCPoly prod = e.normal_form(NCPoly::gen(a) * NCPoly::gen(b));
      const NCPoly lhs = d.delta(prod);
      const NCPoly rhs = d.sigma(a) * d.delta(b) + d.delta(a) * NCPoly::gen(b);
      add("leibniz " + gen_name(a) + "·" + gen_name(b), zero(lhs - rhs));
    }
  const NCPoly X = NCPoly::gen(d.adjoined());
  for (Gen g : d.base_generators()) {
    const NCPoly rr = NCPoly::gen(g);
    add("commutation " + gen_name(d.adjoined()) + "·" + gen_name(g), zero(X * rr - d.sigma(rr) * X - d.delta(rr)));
  }
  return r;
}

inline Report ore_verify_all(const Engine& e) {
  Report all;
  all.suite = "ore";
  for (const auto& s : ore_stages(e.ghost())) all.append(ore_verify(e, s));
  return all;
}

}  // namespace laistry
