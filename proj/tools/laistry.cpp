#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "laistry/battery.hpp"

using namespace laistry;
using json = nlohmann::ordered_json;

namespace {

struct RunConfig {
  unsigned ghost = 1;
  std::string q = "generic";
  std::uint64_t seed = 1;
  std::string output = "json";
  bool negative_control = false;
  unsigned threads = 1;

  AlgebraParams params() const { return AlgebraParams(ghost, QSpec::parse(q)); }
};

struct Outcome {
  json body;
  bool pass = true;
};

json report_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json item{{"name", c.name}, {"pass", c.pass}};
    if (!c.detail.empty()) item["detail"] = c.detail;
    checks.push_back(std::move(item));
  }
  return {{"suite", r.suite}, {"pass", r.passed()}, {"checks", std::move(checks)}};
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

json point_json(const ProjPoint& p) { return json::array({p.a().to_string(), p.b().to_string(), p.c().to_string()}); }

Outcome from_report(const Report& r) { return {report_json(r), r.passed()}; }

void print_text(const json& j, int indent = 0) {
  const std::string pad(indent, ' ');
  if (j.is_object() && j.contains("checks")) {
    std::cout << pad << j["suite"].get<std::string>() << ": " << (j["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
    for (const auto& c : j["checks"])
      std::cout << pad << "  " << (c["pass"].get<bool>() ? "ok   " : "FAIL ") << c["name"].get<std::string>()
                << (c.contains("detail") ? "  " + c["detail"].get<std::string>() : "") << "\n";
    return;
  }
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (k == "schema") continue;
      const bool flat = v.is_array() && std::none_of(v.begin(), v.end(), [](const json& e) { return e.is_structured(); });
      if (v.is_structured() && !flat) {
        std::cout << pad << k << ":\n";
        print_text(v, indent + 2);
      } else {
        std::cout << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
    return;
  }
  if (j.is_array() && std::any_of(j.begin(), j.end(), [](const json& e) { return e.is_structured(); })) {
    for (const auto& e : j) print_text(e, indent);
    return;
  }
  std::cout << pad << j.dump() << "\n";
}

Outcome cmd_nf(const RunConfig& cfg, const std::string& expr) {
  const Engine e(cfg.params());
  const NCPoly nf = e.normal_form(parse_element(expr, e.params()));
  return {{{"input", expr}, {"normal_form", nf.to_string()}}};
}

Outcome cmd_hilbert(const RunConfig& cfg, unsigned degree, bool check) {
  Outcome o{{{"coefficients", hilbert_coeffs(cfg.ghost, degree)}}};
  if (check) {
    const Report r = hilbert_report(cfg.ghost, degree);
    o.body["report"] = report_json(r);
    o.pass = r.passed();
  }
  return o;
}

EngineOptions engine_options(const RunConfig& cfg) {
  EngineOptions eo;
  if (cfg.negative_control) eo.perturbation = Perturbation::JordanLinearSignFlip;
  return eo;
}

Outcome cmd_project(const RunConfig& cfg, const std::string& expr, const std::string& target) {
  const Engine e(cfg.params());
  QuotientKind k;
  if (target == "mod-x1") k = QuotientKind::ModX1;
  else if (target == "mod-zG") k = QuotientKind::ModZG;
  else if (target == "quantum-plane") k = QuotientKind::QuantumPlane;
  else throw InvalidSpec("unknown quotient '" + target + "' (use mod-x1, mod-zG or quantum-plane)");
  const NCPoly p = parse_element(expr, e.params());
  return {{{"input", expr}, {"quotient", quotient_name(k)}, {"image", project(e, p, k).to_string()}}};
}

BraidingParams braiding_from(const RunConfig& cfg, const std::map<std::string, std::string>& overrides) {
  const AlgebraParams p = cfg.params();
  BraidingParams b = BraidingParams::laistrygonian(FieldElem::q(p.q), p.ghost);
  for (const auto& [k, v] : overrides) {
    if (v.empty()) continue;
    const FieldElem x = parse_scalar(v, p.q);
    if (k == "q11") b.q11 = x;
    else if (k == "q12") b.q12 = x;
    else if (k == "q21") b.q21 = x;
    else if (k == "q22") b.q22 = x;
    else if (k == "a") b.a = x;
  }
  b.validate();
  return b;
}

json braiding_params_json(const BraidingParams& b) {
  return {{"q11", b.q11.to_string()}, {"q12", b.q12.to_string()}, {"q21", b.q21.to_string()},
          {"q22", b.q22.to_string()}, {"a", b.a.to_string()}};
}

Outcome cmd_braiding(const RunConfig& cfg, const std::map<std::string, std::string>& overrides) {
  const BraidingParams b = braiding_from(cfg, overrides);
  const bool ok = braid_equation_check(b);
  return {{{"params", braiding_params_json(b)}, {"matrix", matrix_json(braiding_matrix(b))}, {"braid_equation", ok}}, ok};
}

Outcome cmd_twist(const RunConfig& cfg, const std::map<std::string, std::string>& overrides, const std::string& p12,
                  const std::string& p21) {
  const QSpec spec = QSpec::parse(cfg.q);
  const BraidingParams b = braiding_from(cfg, overrides);
  const TwistParams t{parse_scalar(p12, spec), parse_scalar(p21, spec)};
  const BraidingParams r = twist_braiding(b, t);
  const bool ok = braid_equation_check(r);
  return {{{"params", braiding_params_json(b)},
           {"twisted", braiding_params_json(r)},
           {"matrix", matrix_json(braiding_matrix(r))},
           {"braid_equation", ok}},
          ok};
}

Outcome cmd_simples(const RunConfig& cfg, const std::string& kind, const std::string& a, const std::string& b) {
  const AlgebraParams p = cfg.params();
  const FieldElem av = parse_scalar(a, p.q);
  QPModuleSpec ms;
  if (kind == "cyclic") {
    const unsigned N = order_of_q(p.q);
    if (N < 2) throw InvalidSpec("cyclic modules need --q root:N (or num:-1)");
    ms = QPModuleSpec::cyclic(av, parse_scalar(b, p.q), N);
  } else if (kind == "char-x") {
    ms = QPModuleSpec::char_x(av);
  } else if (kind == "char-y") {
    ms = QPModuleSpec::char_y(av);
  } else {
    throw InvalidSpec("unknown module kind '" + kind + "' (use cyclic, char-x or char-y)");
  }
  const MatrixRep rep = pullback(build_qp_module(ms, p.q), p.ghost);
  json mats = json::object();
  for (Gen g : p.generators()) mats[gen_name(g)] = matrix_json(rep[g]);
  const Report rc = rep_check(rep);
  const bool simple = is_simple(rep);
  Outcome o{{{"module", ms.name()}, {"dim", rep.dim}, {"matrices", std::move(mats)}, {"simple", simple},
             {"report", report_json(rc)}}};
  if (ms.kind == QPModuleSpec::Kind::Cyclic) {
    const auto inv = cyclic_invariants(rep);
    o.body["class"] = {{"a^N", inv.a_power.to_string()}, {"b", inv.b.to_string()}};
  }
  o.pass = rc.passed() && simple;
  return o;
}

Outcome cmd_characters(const RunConfig& cfg) {
  json cases = json::array();
  bool ok = true;
  for (const auto& c : solve_characters(cfg.params())) {
    json fams = json::array();
    for (const auto& f : c.families) {
      json values = json::object();
      for (const auto& [v, e] : f.values) values[v] = e.to_string();
      fams.push_back({{"free", f.free}, {"values", std::move(values)}});
    }
    ok = ok && c.unresolved.empty();
    cases.push_back({{"case", c.label}, {"q", c.spec.to_string()}, {"families", std::move(fams)}, {"unresolved", c.unresolved}});
  }
  return {{{"cases", std::move(cases)}}, ok};
}

Outcome cmd_point_propagate(const RunConfig& cfg, const std::string& p0, unsigned depth) {
  const AlgebraParams p = cfg.params();
  const PointSequence s = propagate(ProjPoint::parse(p0, p.q), p, depth);
  json pts = json::array();
  for (const auto& pt : s.pts) pts.push_back(point_json(pt));
  Outcome o{{{"points", std::move(pts)}}};
  if (s.pts.size() >= p.ghost + 3) {
    const Report r = verify_truncated(s);
    o.body["report"] = report_json(r);
    o.pass = r.passed();
  }
  return o;
}

Outcome cmd_point_classify(const RunConfig& cfg, unsigned depth, bool allow_small_roots) {
  ClassifyOptions opt;
  opt.allow_small_roots_of_unity = allow_small_roots;
  const ClassifyResult res = classify_truncated(cfg.params(), depth, opt);
  json fams = json::array();
  for (const auto& f : res.families) {
    json item{{"chart", std::string(1, chart_letter(f.chart))}, {"p0", f.to_string()}};
    if (!f.pending.empty()) item["pending"] = f.pending;
    fams.push_back(std::move(item));
  }
  return {{{"families", std::move(fams)},
           {"leaves", res.leaves},
           {"dead_branches", res.dead_branches},
           {"matches_variety", res.matches_variety},
           {"guards", report_json(res.guards)}},
          res.matches_variety && res.guards.passed()};
}

Outcome cmd_system(const RunConfig& cfg, unsigned g, unsigned J, const std::string& mode) {
  SystemMode m;
  if (mode == "closed_form") m = SystemMode::ClosedForm;
  else if (mode == "numeric_uniqueness") m = SystemMode::NumericUniqueness;
  else throw InvalidSpec("unknown mode '" + mode + "' (use closed_form or numeric_uniqueness)");
  Report r = system_check(g, J, m, cfg.seed, m == SystemMode::ClosedForm ? 1 : 5, QSpec::parse(cfg.q));
  r.append(elimination_identities(g, QSpec::parse(cfg.q)));
  return from_report(r);
}

Outcome cmd_verify_all(const RunConfig& cfg) {
  BatteryOptions bo;
  bo.seed = cfg.seed;
  if (cfg.negative_control) bo.perturbation = Perturbation::JordanLinearSignFlip;
  std::vector<Suite> suites = battery(cfg.params(), bo);
  std::sort(suites.begin(), suites.end(), [](const Suite& a, const Suite& b) { return a.name < b.name; });
  std::vector<Report> results(suites.size());
  std::vector<std::string> errors(suites.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < suites.size();) {
      try {
        results[i] = suites[i].run();
      } catch (const std::exception& ex) {
        errors[i] = ex.what();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(cfg.threads, static_cast<unsigned>(suites.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  json out = json::array();
  std::string first_failure;
  for (std::size_t i = 0; i < suites.size(); ++i) {
    json s = report_json(results[i]);
    s["suite"] = suites[i].name;
    if (!errors[i].empty()) {
      s["pass"] = false;
      s["error"] = errors[i];
    }
    const bool ok = s["pass"].get<bool>();
    if (!ok && first_failure.empty()) {
      const Check* c = results[i].first_failure();
      first_failure = suites[i].name + (c ? ": " + c->name : ": " + errors[i]);
    }
    out.push_back(std::move(s));
  }
  Outcome o{{{"suites", std::move(out)}}, first_failure.empty()};
  if (!o.pass) o.body["first_failure"] = first_failure;
  return o;
}

unsigned default_threads() {
  if (const char* env = std::getenv("LAISTRY_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

void add_common(CLI::App* sub, RunConfig& cfg, bool with_control = false) {
  sub->add_option("--ghost", cfg.ghost, "ghost G >= 1")->capture_default_str();
  sub->add_option("--q", cfg.q, "q: generic, root:N or num:a/b")->capture_default_str();
  sub->add_option("--seed", cfg.seed, "seed for randomized checks")->capture_default_str();
  sub->add_option("--output,-o", cfg.output, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  if (with_control) sub->add_flag("--negative-control", cfg.negative_control, "flip the sign of the x1x2 term in the x2x1 rule");
}

void emit(const RunConfig& cfg, const std::string& command, const json& body) {
  json doc{{"schema", 1}, {"command", command}, {"params", {{"ghost", cfg.ghost}, {"q", cfg.q}}}};
  for (const auto& [k, v] : body.items()) doc[k] = v;
  if (cfg.output == "text") print_text(doc);
  else std::cout << doc.dump(2) << "\n";
}

void emit_error(const std::string& kind, const std::string& message) {
  std::cout << json{{"schema", 1}, {"error", {{"kind", kind}, {"message", message}}}}.dump(2) << "\n";
  std::cerr << "error: " << message << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the Laistrygonian Nichols algebras"};
  app.require_subcommand(1);
  RunConfig cfg;
  cfg.threads = default_threads();

  std::string expr, target = "mod-x1", kind = "cyclic", a = "1", b = "1", p12 = "1", p21 = "1", p0 = "0:0:1",
                    mode = "closed_form";
  unsigned degree = 4, jmax = 5, depth = 0, g = 1, J = 0;
  bool check = false, small_roots = false;
  std::map<std::string, std::string> braid_overrides{{"q11", ""}, {"q12", ""}, {"q21", ""}, {"q22", ""}, {"a", ""}};

  auto* nf = app.add_subcommand("nf", "PBW normal form of an element");
  add_common(nf, cfg);
  nf->add_option("expr", expr, "element, e.g. \"x2*x1\"")->required();

  auto* hil = app.add_subcommand("hilbert", "dimensions of the graded pieces");
  add_common(hil, cfg);
  hil->add_option("--degree,-d", degree, "top degree")->capture_default_str();
  hil->add_flag("--check", check, "compare with the product series");

  auto* conf = app.add_subcommand("confluence", "diamond-lemma check of the rewriting system");
  add_common(conf, cfg, true);
  conf->add_option("--degree,-d", degree, "words up to this degree")->capture_default_str();

  auto* ids = app.add_subcommand("identities", "normal forms of the derived identities");
  add_common(ids, cfg, true);
  ids->add_option("--jmax", jmax, "largest power in the x2^j x1 identity")->capture_default_str();

  auto* ore = app.add_subcommand("ore", "iterated Ore extension stages");
  add_common(ore, cfg);

  auto* proj = app.add_subcommand("project", "image in a quotient");
  add_common(proj, cfg);
  proj->add_option("expr", expr, "element")->required();
  proj->add_option("--to", target, "mod-x1, mod-zG or quantum-plane")->capture_default_str();

  auto add_braid_overrides = [&](CLI::App* sub) {
    for (auto& [k, v] : braid_overrides) sub->add_option("--" + k, v, "override " + k);
  };
  auto* braid = app.add_subcommand("braiding", "9x9 braiding matrix and braid equation");
  add_common(braid, cfg);
  add_braid_overrides(braid);

  auto* tw = app.add_subcommand("twist", "twist a braiding by (p12, p21)");
  add_common(tw, cfg);
  add_braid_overrides(tw);
  tw->add_option("--p12", p12)->capture_default_str();
  tw->add_option("--p21", p21)->capture_default_str();

  auto* simp = app.add_subcommand("simples", "pullback of a quantum-plane module");
  add_common(simp, cfg);
  simp->add_option("--kind", kind, "cyclic, char-x or char-y")->capture_default_str();
  simp->add_option("--a", a)->capture_default_str();
  simp->add_option("--b", b)->capture_default_str();

  auto* chars = app.add_subcommand("characters", "all one-dimensional representations");
  add_common(chars, cfg);

  auto* point = app.add_subcommand("point", "truncated point modules");
  point->require_subcommand(1);
  auto* prop = point->add_subcommand("propagate", "the sequence determined by P0");
  add_common(prop, cfg);
  prop->add_option("--p0", p0, "a:b:c")->capture_default_str();
  prop->add_option("--depth,-d", depth, "last index (default G+4)");
  auto* cls = point->add_subcommand("classify", "every P0 that extends to depth D");
  add_common(cls, cfg);
  cls->add_option("--depth,-d", depth, "last index (default G+4)");
  cls->add_flag("--allow-small-roots", small_roots, "run even when q has order at most D");

  auto* sys = app.add_subcommand("system", "the lambda system and its elimination identities");
  add_common(sys, cfg);
  sys->add_option("--g", g, "level g >= 1")->capture_default_str();
  sys->add_option("--J", J, "last lambda index (default g+4)");
  sys->add_option("--mode", mode, "closed_form or numeric_uniqueness")->capture_default_str();

  auto* all = app.add_subcommand("verify-all", "run every applicable suite");
  add_common(all, cfg, true);
  all->add_option("--threads,-j", cfg.threads, "worker threads (default $LAISTRY_THREADS or 1)")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit_error("UsageError", e.what());
    return 2;
  }

  try {
    Outcome o;
    std::string name;
    if (nf->parsed()) name = "nf", o = cmd_nf(cfg, expr);
    else if (hil->parsed()) name = "hilbert", o = cmd_hilbert(cfg, degree, check);
    else if (conf->parsed()) name = "confluence", o = from_report(confluence_check(Engine(cfg.params(), engine_options(cfg)), degree));
    else if (ids->parsed()) name = "identities", o = from_report(verify_derived_identities(Engine(cfg.params(), engine_options(cfg)), jmax));
    else if (ore->parsed()) name = "ore", o = from_report(ore_verify_all(Engine(cfg.params())));
    else if (proj->parsed()) name = "project", o = cmd_project(cfg, expr, target);
    else if (braid->parsed()) name = "braiding", o = cmd_braiding(cfg, braid_overrides);
    else if (tw->parsed()) name = "twist", o = cmd_twist(cfg, braid_overrides, p12, p21);
    else if (simp->parsed()) name = "simples", o = cmd_simples(cfg, kind, a, b);
    else if (chars->parsed()) name = "characters", o = cmd_characters(cfg);
    else if (prop->parsed()) name = "point propagate", o = cmd_point_propagate(cfg, p0, depth ? depth : cfg.ghost + 4);
    else if (cls->parsed()) name = "point classify", o = cmd_point_classify(cfg, depth ? depth : cfg.ghost + 4, small_roots);
    else if (sys->parsed()) name = "system", o = cmd_system(cfg, g, J ? J : g + 4, mode);
    else if (all->parsed()) name = "verify-all", o = cmd_verify_all(cfg);
    o.body["pass"] = o.pass;
    emit(cfg, name, o.body);
    return o.pass ? 0 : 1;
  } catch (const ParseError& e) {
    emit_error(e.kind(), e.what());
    return 2;
  } catch (const InvalidSpec& e) {
    emit_error(e.kind(), e.what());
    return 2;
  } catch (const IndexOutOfRange& e) {
    emit_error(e.kind(), e.what());
    return 2;
  } catch (const Unsupported& e) {
    emit_error(e.kind(), e.what());
    return 2;
  } catch (const NotOnVariety& e) {
    emit_error(e.kind(), e.what());
    return 2;
  } catch (const Error& e) {
    emit_error(e.kind(), e.what());
    return 1;
  } catch (const std::exception& e) {
    emit_error("InternalError", e.what());
    return 1;
  }
}
