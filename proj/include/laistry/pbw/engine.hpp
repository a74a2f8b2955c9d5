#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "laistry/errors.hpp"
#include "laistry/pbw/ncpoly.hpp"
#include "laistry/pbw/word.hpp"

namespace laistry {

// Deliberate corruptions of the x2·x1 rule, used as negative controls.
enum class Perturbation {
  None,
  JordanQuadraticOne,    // x2x1 -> x1x2 - x1^2 (a rescaling of x1: stays consistent)
  JordanLinearTwo,       // x2x1 -> 2 x1x2 - 1/2 x1^2
  JordanLinearSignFlip,  // x2x1 -> -x1x2 - 1/2 x1^2
};

inline std::string perturbation_name(Perturbation p) {
  switch (p) {
    case Perturbation::None: return "none";
    case Perturbation::JordanQuadraticOne: return "jordan-quadratic-one";
    case Perturbation::JordanLinearTwo: return "jordan-linear-two";
    case Perturbation::JordanLinearSignFlip: return "jordan-linear-sign-flip";
  }
  return "none";
}

struct NamedRelation {
  std::string name;
  NCPoly poly;
};

struct EngineOptions {
  Perturbation perturbation = Perturbation::None;
  std::size_t step_budget = 10'000'000;
};

// Straightening of free-algebra elements into the PBW basis of B(L_q(1,G)).
//
// Rewrite rules, one per descent pair (a, b) with rank(a) > rank(b):
//   x2 x1   -> x1 x2 - 1/2 x1^2
//   z_n x1  -> q^-1 x1 z_n
//   z_n x2  -> q^-1 x2 z_n - q^-1 z_{n+1}   (n < G)
//   z_G x2  -> q^-1 x2 z_G
//   z_m z_n -> q^(m-n) z_n z_m              (m < n)
// Normal forms are computed by left-multiplying generators into PBW words,
// memoized in a cache shared between copies of the engine.
class Engine {
 public:
  explicit Engine(AlgebraParams params, EngineOptions options = {})
      : params_(std::move(params)), options_(options), cache_(std::make_shared<Cache>()) {
    params_.validate();
    q_ = FieldElem::q(params_.q);
    qinv_ = q_.inverse();
    build_rules();
  }

  const AlgebraParams& params() const { return params_; }
  unsigned ghost() const { return params_.ghost; }
  const QSpec& spec() const { return params_.q; }
  const FieldElem& q() const { return q_; }
  const FieldElem& qinv() const { return qinv_; }
  FieldElem scalar(const mpq_class& c) const { return FieldElem(params_.q, c); }
  FieldElem q_pow(long e) const { return q_.pow(e); }
  Perturbation perturbation() const { return options_.perturbation; }

  bool is_descent(Gen a, Gen b) const { return pbw_rank(a) > pbw_rank(b); }

  // Right-hand side of the rule for the descent pair a·b.
  const NCPoly& rule(Gen a, Gen b) const {
    if (!params_.contains(a) || !params_.contains(b) || !is_descent(a, b))
      throw InvalidSpec("no rewrite rule for " + gen_name(a) + "·" + gen_name(b));
    return rules_[index(a, b)];
  }

  NCPoly normal_form(const Word& w) const {
    params_.check_word(w);
    Budget budget{options_.step_budget};
    return nf_word(w, budget);
  }

  NCPoly normal_form(const NCPoly& p) const {
    Budget budget{options_.step_budget};
    NCPoly out;
    for (const auto& [w, c] : p.terms()) {
      params_.check_word(w);
      if (is_pbw_ordered(w)) {
        out.add_term(w, c);
        continue;
      }
      out += nf_word(w, budget).scaled(c);
    }
    return out;
  }

  NCPoly multiply(const NCPoly& a, const NCPoly& b) const { return normal_form(a * b); }

  // The defining relations, as elements of the free algebra.
  std::vector<NamedRelation> defining_relations() const {
    const unsigned G = ghost();
    std::vector<NamedRelation> out;
    out.push_back({"jordan", x2() * x1() - x1() * x2() + (x1() * x1()).scaled(scalar(mpq_class(1, 2)))});
    out.push_back({"x1_z0", x1() * zn(0) - (zn(0) * x1()).scaled(q_)});
    for (unsigned n = 0; n < G; ++n)
      out.push_back({"z_z(" + std::to_string(n) + ")", zn(n) * zn(n + 1) - (zn(n + 1) * zn(n)).scaled(qinv_)});
    for (unsigned n = 0; n < G; ++n)
      out.push_back({"x2_z(" + std::to_string(n) + ")", x2() * zn(n) - (zn(n) * x2()).scaled(q_) - zn(n + 1)});
    out.push_back({"x2_zG", x2() * zn(G) - (zn(G) * x2()).scaled(q_)});
    return out;
  }

  // Consequences installed as rules: x1 z_n = q z_n x1 and z_m z_n = q^(m-n) z_n z_m.
  std::vector<NamedRelation> derived_relations() const {
    const unsigned G = ghost();
    std::vector<NamedRelation> out;
    for (unsigned n = 0; n <= G; ++n)
      out.push_back({"x1_z(" + std::to_string(n) + ")", x1() * zn(n) - (zn(n) * x1()).scaled(q_)});
    for (unsigned m = 0; m <= G; ++m)
      for (unsigned n = m + 1; n <= G; ++n)
        out.push_back({"z_z(" + std::to_string(m) + "," + std::to_string(n) + ")",
                       zn(m) * zn(n) - (zn(n) * zn(m)).scaled(q_pow(static_cast<long>(m) - static_cast<long>(n)))});
    return out;
  }

  std::size_t cache_size() const {
    std::shared_lock lock(cache_->mutex);
    return cache_->entries.size();
  }

 private:
  struct Cache {
    mutable std::shared_mutex mutex;
    std::unordered_map<std::string, NCPoly> entries;
  };

  struct Budget {
    std::size_t remaining;
    void spend() {
      if (remaining == 0) throw BudgetExceeded("normal form exceeded the rewrite-step budget");
      --remaining;
    }
  };

  std::size_t index(Gen a, Gen b) const { return static_cast<std::size_t>(a) * params_.generator_count() + b; }

  void build_rules() {
    const unsigned n_gen = params_.generator_count();
    const unsigned G = ghost();
    rules_.assign(static_cast<std::size_t>(n_gen) * n_gen, NCPoly());
    const FieldElem half = scalar(mpq_class(1, 2));
    FieldElem linear = scalar(1), quadratic = -half;
    switch (options_.perturbation) {
      case Perturbation::None: break;
      case Perturbation::JordanQuadraticOne: quadratic = scalar(-1); break;
      case Perturbation::JordanLinearTwo: linear = scalar(2); break;
      case Perturbation::JordanLinearSignFlip: linear = scalar(-1); break;
    }
    rules_[index(X2, X1)] = (x1() * x2()).scaled(linear) + (x1() * x1()).scaled(quadratic);
    for (unsigned n = 0; n <= G; ++n) {
      rules_[index(z(n), X1)] = (x1() * zn(n)).scaled(qinv_);
      NCPoly r = (x2() * zn(n)).scaled(qinv_);
      if (n < G) r -= zn(n + 1).scaled(qinv_);
      rules_[index(z(n), X2)] = r;
      for (unsigned k = n + 1; k <= G; ++k)
        rules_[index(z(n), z(k))] = (zn(k) * zn(n)).scaled(q_pow(static_cast<long>(n) - static_cast<long>(k)));
    }
  }

  NCPoly nf_word(const Word& w, Budget& budget) const {
    NCPoly acc(1);
    for (std::size_t i = w.size(); i-- > 0;) acc = left_multiply(at(w, i), acc, budget);
    return acc;
  }

  // g · p for p supported on PBW words.
  NCPoly left_multiply(Gen g, const NCPoly& p, Budget& budget) const {
    NCPoly out;
    for (const auto& [w, c] : p.terms()) {
      if (w.empty() || !is_descent(g, at(w, 0))) {
        out.add_term(static_cast<char>(g) + w, c);
        continue;
      }
      out += left_multiply_word(g, w, budget).scaled(c);
    }
    return out;
  }

  NCPoly left_multiply_word(Gen g, const Word& u, Budget& budget) const {
    const std::string key = static_cast<char>(g) + u;
    {
      std::shared_lock lock(cache_->mutex);
      auto it = cache_->entries.find(key);
      if (it != cache_->entries.end()) return it->second;
    }
    budget.spend();
    const Word rest = u.substr(1);
    NCPoly out;
    for (const auto& [w, c] : rule(g, at(u, 0)).terms()) {
      NCPoly t = NCPoly::monomial(rest, c);
      for (std::size_t i = w.size(); i-- > 0;) t = left_multiply(at(w, i), t, budget);
      out += t;
    }
    std::unique_lock lock(cache_->mutex);
    cache_->entries.emplace(key, out);
    return out;
  }

  AlgebraParams params_;
  EngineOptions options_;
  FieldElem q_;
  FieldElem qinv_;
  std::vector<NCPoly> rules_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace laistry
