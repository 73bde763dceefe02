#include "conic/cli.hpp"

#include <chrono>
#include <iomanip>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "conic/suite.hpp"

namespace conic {

namespace {

struct Flags {
  std::string input;
  std::string method;
  std::string identity;
  std::string xi;
  std::vector<std::string> heights;
  std::string dual_heights;
  std::string box;
  std::string step = "1/2";
  std::size_t samples = 200;
  std::uint64_t seed = 1;
  std::optional<std::size_t> vertex;
  bool exact_cells = false;
  bool json = false;
  bool check = false;
  bool dump = false;
};

// One named sub-check of a verification run.
struct Check {
  std::string name;
  IdentityReport report;
  std::string detail;
};

Json counterexample_json(const IdentityReport& r) {
  if (!r.counterexample) return nullptr;
  const auto& c = *r.counterexample;
  return Json{{"point", to_json(c.point)}, {"lhs", c.lhs.to_string()}, {"rhs", c.rhs.to_string()}};
}

WitnessOptions witness_options(const Flags& f, const Polytope& p) {
  WitnessOptions o = default_witnesses(p);
  if (!f.box.empty()) o.box = parse_box(f.box, p.dim());
  try {
    o.step = parse_rational(f.step);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("--step: ") + e.what());
  }
  if (o.step <= 0) throw InputError("--step must be positive");
  o.extra_samples = f.samples;
  o.seed = f.seed;
  o.exact_cells = f.exact_cells;
  return o;
}

std::vector<std::size_t> selected_vertices(const Flags& f, const Polytope& p, bool prefer_nonsimple) {
  if (f.vertex) {
    if (*f.vertex >= p.vertices().size()) throw InputError("--vertex out of range");
    return {*f.vertex};
  }
  std::vector<std::size_t> all, nonsimple;
  for (std::size_t v = 0; v < p.vertices().size(); ++v) {
    all.push_back(v);
    if (!is_simple_vertex(p, v)) nonsimple.push_back(v);
  }
  return prefer_nonsimple && !nonsimple.empty() ? nonsimple : all;
}

TriangulationMap triangulations(const Flags& f, const Polytope& p) {
  return vertex_triangulations(p, parse_heights(f.heights), f.seed);
}

Functional functional_for(const Flags& f, const Polytope& p, const std::vector<TriangulationMap>& families) {
  if (!f.xi.empty()) return parse_functional(f.xi, p.dim());
  Rng rng(f.seed);
  return families.empty() ? random_generic_functional(p, rng) : generic_functional(p, families, rng);
}

Json parameters_json(const Flags& f, const std::optional<Functional>& xi, const WitnessOptions& o) {
  Json heights = Json::object();
  for (const auto& [v, h] : parse_heights(f.heights)) heights["v" + std::to_string(v)] = to_json(RatVector(h));
  return Json{{"xi", xi ? to_json(xi->xi) : Json(nullptr)},
              {"heights", heights},
              {"dual_heights", f.dual_heights.empty() ? Json(nullptr) : Json(f.dual_heights)},
              {"box", {{"lo", to_json(o.box.lo)}, {"hi", to_json(o.box.hi)}}},
              {"step", to_json(o.step)},
              {"samples", o.extra_samples},
              {"seed", f.seed},
              {"exact_cells", o.exact_cells}};
}

int cmd_count(const Flags& f, std::ostream& out, std::ostream& err) {
  Polytope p = load_polytope(f.input);
  std::string method = f.method.empty() ? "brion" : f.method;
  if (method != "brion" && method != "brute") throw InputError("count: --method must be brion or brute");
  Integer brion, brute;
  bool need_brion = method == "brion" || f.check, need_brute = method == "brute" || f.check;
  if (need_brion) brion = count_lattice_points(brion_gf(p));
  if (need_brute) brute = Integer(static_cast<unsigned long>(lattice_points(p).size()));
  Integer answer = method == "brion" ? brion : brute;
  bool agree = !f.check || brion == brute;
  if (f.json) {
    Json j{{"count", to_json(answer)}, {"method", method}};
    if (f.check) j["check"] = Json{{"brion", to_json(brion)}, {"brute", to_json(brute)}, {"agree", agree}};
    out << j.dump(2) << "\n";
  } else {
    out << to_string(answer) << "\n";
  }
  if (!agree) {
    err << "count mismatch: brion " << to_string(brion) << ", brute force " << to_string(brute) << "\n";
    return 1;
  }
  return 0;
}

int cmd_decompose(const Flags& f, std::ostream& out) {
  Polytope p = load_polytope(f.input);
  const std::string& m = f.method;
  Json j;
  if (m == "gram") {
    j = to_json(gram_decomposition(p));
  } else if (m == "brion-gf") {
    j = to_json(brion_gf(p));
  } else if (m == "gram-gf") {
    j = to_json(gram_gf(p));
  } else if (m == "lv" || m == "weighted-lv") {
    Functional xi = functional_for(f, p, {});
    if (!is_generic(xi, p) && is_simple(p)) throw GenericityError("functional " + f.xi + " is constant on an edge");
    j = to_json(m == "lv" ? lv_decomposition(p, xi) : weighted_lv_decomposition(p, xi));
    j["xi"] = to_json(xi.xi);
  } else if (m == "nonsimple") {
    TriangulationMap tris = triangulations(f, p);
    Functional xi = functional_for(f, p, {tris});
    j = to_json(nonsimple_decomposition(p, xi, tris));
    j["xi"] = to_json(xi.xi);
    Json t = Json::object();
    for (const auto& [v, tri] : tris) t["v" + std::to_string(v)] = to_json(tri);
    j["triangulations"] = t;
  } else {
    throw InputError("decompose: unknown --method \"" + m + "\" (gram, brion-gf, gram-gf, lv, weighted-lv, nonsimple)");
  }
  out << j.dump(2) << "\n";
  return 0;
}

int cmd_verify(const Flags& f, std::ostream& out) {
  auto start = std::chrono::steady_clock::now();
  Polytope p = load_polytope(f.input);
  const std::string& id = f.identity;
  std::vector<Check> checks;
  std::optional<Functional> xi;
  Json extra = Json::object();

  auto add = [&](std::string name, IdentityReport r, std::string detail = "") {
    checks.push_back({std::move(name), std::move(r), std::move(detail)});
  };

  if (id == "compatible" && !p.in_interior(RatVector(p.dim(), Rational(0)))) {
    Centering c = center_at_barycenter(p);
    extra["shift"] = to_json(c.shift);
    p = c.polytope;
  }
  WitnessOptions o = witness_options(f, p);

  if (id == "gram") {
    add("gram", verify_identity(gram_decomposition(p), indicator_of(p), o));
  } else if (id == "brion") {
    Integer brion = count_lattice_points(brion_gf(p));
    Integer brute(static_cast<unsigned long>(lattice_points(p).size()));
    IdentityReport count;
    count.points_checked = 1;
    count.ok = brion == brute;
    add("count", count, "brion " + to_string(brion) + ", brute force " + to_string(brute));
    IdentityReport gf;
    gf.points_checked = 5;
    gf.ok = gf_equal_as_functions(brion_gf(p), gf_brute_force(p), 5, f.seed);
    add("generating-function", gf, gf.ok ? "" : "Brion sum differs from the enumerated generating function");
  } else if (id == "lv" || id == "weighted" || id == "rearrange") {
    if (!is_simple(p)) {
      throw NotSimpleError("polytope is not simple; identity " + id +
                           " needs simple vertices, use --identity nonsimple instead");
    }
    xi = functional_for(f, p, {});
    if (!is_generic(*xi, p)) throw GenericityError("functional " + to_string(xi->xi) + " is constant on an edge");
    if (id == "lv") {
      add("lv", verify_identity(lv_decomposition(p, *xi), indicator_of(p), o));
    } else if (id == "weighted") {
      IndicatorSum w = weighted_lv_decomposition(p, *xi);
      add("weighted", verify_identity(w, weighted_indicator(p), o));
      add("z=1", verify_identity(w.specialized(1), indicator_of(p), o));
      add("z=0", verify_identity(w.specialized(0), interior_indicator(p), o));
    } else {
      for (auto v : selected_vertices(f, p, false)) {
        auto [lhs, rhs] = rearrange_for_vertex(p, v, *xi);
        add("rearrange v" + std::to_string(v), verify_identity(lhs, rhs, o));
      }
    }
  } else if (id == "partition") {
    for (auto v : selected_vertices(f, p, false)) {
      if (!is_simple_vertex(p, v)) {
        if (f.vertex) throw NotSimpleError("partition needs a simple vertex");
        continue;
      }
      add("partition v" + std::to_string(v), partition_check(p, v, o));
    }
  } else if (id == "eq6") {
    TriangulationMap tris = triangulations(f, p);
    for (auto v : selected_vertices(f, p, true)) add("eq6 v" + std::to_string(v), intersection_check(p, v, tris.at(v), o));
  } else if (id == "nonsimple") {
    TriangulationMap tris = triangulations(f, p);
    xi = functional_for(f, p, {tris});
    add("nonsimple", verify_identity(nonsimple_decomposition(p, *xi, tris), indicator_of(p), o));
  } else if (id == "delta-invariance") {
    TriangulationMap tris = triangulations(f, p);
    std::map<std::size_t, std::vector<LiftedTriangulation>> others;
    std::vector<TriangulationMap> families{tris};
    for (auto v : selected_vertices(f, p, true)) {
      others[v] = distinct_triangulations(normal_rays(p, v), 4, f.seed);
      for (const auto& t : others[v]) {
        TriangulationMap m = tris;
        m.at(v) = t;
        families.push_back(std::move(m));
      }
    }
    xi = functional_for(f, p, families);
    Json used = Json::object();
    for (const auto& [v, list] : others) {
      Json cells = Json::array();
      cells.push_back(tris.at(v).cells);
      for (std::size_t k = 0; k < list.size(); ++k) {
        cells.push_back(list[k].cells);
        add("delta v" + std::to_string(v) + " #" + std::to_string(k),
            delta_invariance_check(p, v, *xi, tris.at(v), list[k], o));
      }
      used["v" + std::to_string(v)] = cells;
    }
    extra["triangulations"] = used;
  } else if (id == "compatible") {
    std::vector<Rational> dh = f.dual_heights.empty() ? default_dual_heights(p, f.seed) : parse_rational_list(f.dual_heights);
    TriangulationMap tris = compatible_from_dual(p, dh);
    extra["dual_heights_used"] = to_json(RatVector(dh));
    xi = functional_for(f, p, {tris});
    IdentityReport certs;
    for (const auto& [v, t] : tris) {
      ++certs.points_checked;
      certs.ok = certs.ok && t.verify_certificates();
    }
    add("inherited certificates", certs);
    add("compatible", verify_identity(nonsimple_decomposition(p, *xi, tris), indicator_of(p), o));
  } else if (id == "positive-conic") {
    TriangulationMap tris = triangulations(f, p);
    xi = functional_for(f, p, {tris});
    ConicReport r = positive_conic_check(local_contributions(p, tris, *xi), *xi, f.samples, f.seed);
    IdentityReport ir;
    ir.ok = r.ok;
    ir.points_checked = r.directions_checked;
    std::string detail;
    if (r.violation) {
      const auto& w = *r.violation;
      ir.counterexample = Counterexample{w.point, w.value, IntPoly(0)};
      detail = w.property + " violated at v" + std::to_string(w.vertex) + " along " + to_string(w.direction);
    }
    add("positive-conic", ir, detail);
  } else {
    throw InputError("verify: unknown --identity \"" + id +
                     "\" (gram, brion, lv, weighted, rearrange, partition, eq6, nonsimple, delta-invariance, "
                     "compatible, positive-conic)");
  }

  bool ok = true;
  std::size_t points = 0;
  const Check* first_failure = nullptr;
  Json checks_json = Json::array();
  for (const auto& c : checks) {
    ok = ok && c.report.ok;
    points += c.report.points_checked;
    if (!c.report.ok && !first_failure) first_failure = &c;
    checks_json.push_back(Json{{"name", c.name},
                               {"points_checked", c.report.points_checked},
                               {"outcome", c.report.ok ? "pass" : "fail"},
                               {"counterexample", counterexample_json(c.report)},
                               {"detail", c.detail}});
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (f.json) {
    Json j{{"identity", id},
           {"input", f.input},
           {"parameters", parameters_json(f, xi, o)},
           {"points_checked", points},
           {"outcome", ok ? "pass" : "fail"},
           {"counterexample", first_failure ? counterexample_json(first_failure->report) : Json(nullptr)},
           {"checks", checks_json}};
    for (const auto& [k, v] : extra.items()) j[k] = v;
    out << j.dump(2) << "\n";
  } else {
    out << "identity " << id << ": " << (ok ? "pass" : "FAIL") << " (" << points << " points, " << std::fixed
        << std::setprecision(3) << seconds << " s)\n";
    if (xi) out << "  xi = " << to_string(xi->xi) << "\n";
    for (const auto& c : checks) {
      out << "  " << c.name << ": " << describe(c.report);
      if (!c.detail.empty()) out << " [" << c.detail << "]";
      out << "\n";
    }
  }
  return ok ? 0 : 1;
}

int cmd_corpus(const Flags& f, std::ostream& out) {
  std::vector<CorpusEntry> entries = f.input.empty() ? builtin_corpus() : load_corpus(f.input);
  if (f.dump) {
    out << corpus_to_json(entries).dump(2) << "\n";
    return 0;
  }
  SuiteOptions options;
  options.seed = f.seed;
  auto start = std::chrono::steady_clock::now();
  auto results = run_suite(entries, options);
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::size_t failed = 0;
  Json rows = Json::array();
  for (const auto& r : results) {
    failed += !r.ok;
    rows.push_back(Json{{"entry", r.entry}, {"check", r.check}, {"outcome", r.ok ? "pass" : "fail"},
                        {"points_checked", r.points}, {"detail", r.detail}});
  }
  if (f.json) {
    out << Json{{"checks", rows}, {"passed", results.size() - failed}, {"failed", failed}}.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      out << std::left << std::setw(20) << r.entry << std::setw(12) << r.check << (r.ok ? "pass" : "FAIL")
          << "  " << r.points;
      if (!r.ok) out << "  " << r.detail;
      out << "\n";
    }
    out << results.size() - failed << "/" << results.size() << " checks passed in " << std::fixed
        << std::setprecision(2) << seconds << " s\n";
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Flags f;
  CLI::App app{"Exact cone decompositions of rational polytopes", "conic"};
  app.require_subcommand(1);

  auto input = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--input", f.input, "polytope JSON file");
    if (required) opt->required();
  };
  auto verification = [&](CLI::App* sub) {
    sub->add_option("--xi", f.xi, "functional, comma-separated integers");
    sub->add_option("--heights", f.heights, "per-vertex ray heights v<i>=h1,...")->take_all();
    sub->add_option("--dual-heights", f.dual_heights, "one height per facet for the compatible mode");
    sub->add_option("--seed", f.seed, "seed for random choices");
  };

  auto* count = app.add_subcommand("count", "count lattice points");
  input(count, true);
  count->add_option("--method", f.method, "brion or brute");
  count->add_flag("--check", f.check, "run both methods and compare");
  count->add_flag("--json", f.json);

  auto* decompose = app.add_subcommand("decompose", "print a decomposition as JSON");
  input(decompose, true);
  decompose->add_option("--method", f.method, "gram, brion-gf, gram-gf, lv, weighted-lv, nonsimple")->required();
  verification(decompose);
  decompose->add_flag("--json", f.json, "accepted for symmetry; output is always JSON");

  auto* verify = app.add_subcommand("verify", "check an identity pointwise");
  input(verify, true);
  verify->add_option("--identity", f.identity)->required();
  verification(verify);
  verify->add_option("--box", f.box, "witness box lo,hi in every coordinate");
  verify->add_option("--step", f.step, "grid step p/q");
  verify->add_option("--samples", f.samples, "extra random points (direction samples for positive-conic)");
  verify->add_option("--vertex", f.vertex, "restrict vertex-wise identities to one vertex");
  verify->add_flag("--exact-cells", f.exact_cells, "also test one point per arrangement cell");
  verify->add_flag("--json", f.json);

  auto* corpus = app.add_subcommand("corpus", "run every check over a corpus");
  input(corpus, false);
  corpus->add_option("--seed", f.seed);
  corpus->add_flag("--json", f.json);
  corpus->add_flag("--dump", f.dump, "print the corpus as JSON instead of running it");

  std::vector<const char*> argv{"conic"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (count->parsed()) return cmd_count(f, out, err);
    if (decompose->parsed()) return cmd_decompose(f, out);
    if (verify->parsed()) return cmd_verify(f, out);
    return cmd_corpus(f, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    err << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace conic
