#pragma once

#include <string>
#include <utility>
#include <vector>

namespace laistry {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Itemized outcome of a verification routine.
struct Report {
  std::string suite;
  std::vector<Check> checks;

  void add(std::string name, bool pass, std::string detail = {}) {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }

  void append(const Report& other) {
    for (const auto& c : other.checks) checks.push_back({other.suite + "/" + c.name, c.pass, c.detail});
  }

  bool passed() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  const Check* first_failure() const {
    for (const auto& c : checks)
      if (!c.pass) return &c;
    return nullptr;
  }

  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += !c.pass;
    return n;
  }

  // Throws E describing the first failing item, if any.
  template <class E>
  const Report& enforce() const {
    if (const Check* c = first_failure())
      throw E(suite + ": " + c->name + (c->detail.empty() ? "" : " (" + c->detail + ")"));
    return *this;
  }
};

}  // namespace laistry
