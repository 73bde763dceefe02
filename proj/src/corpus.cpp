#include "conic/corpus.hpp"

#include <algorithm>
#include <set>

namespace conic {

namespace {

constexpr std::uint64_t kRandomPolytopeSeed = 2718;

Json vertices_json(std::size_t dim, const std::vector<std::vector<std::string>>& pts) {
  Json verts = Json::array();
  for (const auto& p : pts) verts.push_back(p);
  return Json{{"dim", dim}, {"vertices", verts}};
}

Json box_json(std::size_t dim) {
  std::vector<std::vector<std::string>> pts;
  for (std::size_t mask = 0; mask < (std::size_t{1} << dim); ++mask) {
    std::vector<std::string> p;
    for (std::size_t i = 0; i < dim; ++i) p.push_back(mask >> i & 1 ? "1" : "0");
    pts.push_back(p);
  }
  return vertices_json(dim, pts);
}

Json simplex_json(std::size_t dim) {
  std::vector<std::vector<std::string>> pts(1, std::vector<std::string>(dim, "0"));
  for (std::size_t i = 0; i < dim; ++i) {
    pts.emplace_back(dim, "0");
    pts.back()[i] = "1";
  }
  return vertices_json(dim, pts);
}

Json cross_json(std::size_t dim) {
  std::vector<std::vector<std::string>> pts;
  for (std::size_t i = 0; i < dim; ++i) {
    for (const char* s : {"1", "-1"}) {
      pts.emplace_back(dim, "0");
      pts.back()[i] = s;
    }
  }
  return vertices_json(dim, pts);
}

Json pyramid_json() {
  // Inner normals n1..n4 of the apex, then the base; the apex is vertex 0.
  Json ineq = Json::array();
  for (auto n : {std::vector<int>{1, 0, 1}, {-1, 0, 1}, {0, 1, 1}, {0, -1, 1}}) {
    ineq.push_back(Json{{"normal", n}, {"offset", "0"}});
  }
  ineq.push_back(Json{{"normal", {0, 0, -1}}, {"offset", "-1"}});
  return Json{{"dim", 3}, {"inequalities", ineq}};
}

// Random nonempty subsets of {0,1}^d until full-dimensional.
Json random01_json(std::size_t dim, Rng& rng) {
  const std::size_t n = std::size_t{1} << dim;
  while (true) {
    std::vector<RatVector> pts;
    std::vector<std::vector<std::string>> text;
    for (std::size_t mask = 0; mask < n; ++mask) {
      if (rng.uniform(0, 1) == 0) continue;
      RatVector p;
      std::vector<std::string> t;
      for (std::size_t i = 0; i < dim; ++i) {
        p.emplace_back(static_cast<long>(mask >> i & 1));
        t.push_back(mask >> i & 1 ? "1" : "0");
      }
      pts.push_back(p);
      text.push_back(t);
    }
    if (pts.size() > dim + 1 && affine_rank(pts) == static_cast<int>(dim)) return vertices_json(dim, text);
  }
}

}  // namespace

CorpusEntry make_entry(const std::string& name, const Json& source) {
  Polytope p = polytope_from_json(source);
  std::vector<std::string> tags{is_simple(p) ? "simple" : "non-simple", "dim=" + std::to_string(p.dim())};
  Integer count(static_cast<unsigned long>(lattice_points(p).size()));
  return {name, source, std::move(p), std::move(tags), count};
}

std::vector<CorpusEntry> builtin_corpus() {
  std::vector<std::pair<std::string, Json>> sources;
  sources.emplace_back("segment", vertices_json(1, {{"-3"}, {"5"}}));
  sources.emplace_back("rational-segment", vertices_json(1, {{"-5/2"}, {"7/3"}}));
  sources.emplace_back("square", box_json(2));
  sources.emplace_back("cube", box_json(3));
  sources.emplace_back("4-cube", box_json(4));
  sources.emplace_back("triangle", simplex_json(2));
  sources.emplace_back("tetrahedron", simplex_json(3));
  sources.emplace_back("4-simplex", simplex_json(4));
  sources.emplace_back("wide-triangle", vertices_json(2, {{"0", "0"}, {"2", "1"}, {"1", "2"}}));
  sources.emplace_back("rational-triangle", vertices_json(2, {{"-1/2", "0"}, {"7/2", "1/3"}, {"1", "5/2"}}));
  sources.emplace_back("diamond", cross_json(2));
  sources.emplace_back("octahedron", cross_json(3));
  sources.emplace_back("pyramid", pyramid_json());
  sources.emplace_back("pentagon-cone", vertices_json(3, {{"0", "0", "0"},
                                                          {"2", "0", "1"},
                                                          {"1", "2", "1"},
                                                          {"-1", "2", "1"},
                                                          {"-2", "0", "1"},
                                                          {"0", "-2", "1"}}));
  Rng rng(kRandomPolytopeSeed);
  for (std::size_t d = 2; d <= 4; ++d) sources.emplace_back("random01-" + std::to_string(d), random01_json(d, rng));

  std::vector<CorpusEntry> out;
  for (const auto& [name, src] : sources) out.push_back(make_entry(name, src));
  return out;
}

std::vector<CorpusEntry> corpus_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("corpus must be a JSON array of entries");
  if (j.empty()) throw InputError("corpus is empty");
  std::vector<CorpusEntry> out;
  std::set<std::string> names;
  for (const auto& e : j) {
    if (!e.is_object() || !e.contains("name") || !e["name"].is_string() || !e.contains("polytope")) {
      throw InputError("corpus entries need \"name\" and \"polytope\"");
    }
    std::string name = e["name"].get<std::string>();
    if (!names.insert(name).second) throw InputError("duplicate corpus entry " + name);
    CorpusEntry entry = make_entry(name, e["polytope"]);
    if (e.contains("expected_count")) {
      Rational c = rational_from_json(e["expected_count"]);
      if (c.get_den() != 1 || c < 0) throw InputError(name + ": expected_count must be a nonnegative integer");
      entry.expected_count = c.get_num();
    }
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<CorpusEntry> load_corpus(const std::string& path) { return corpus_from_json(read_json_file(path)); }

Json corpus_to_json(const std::vector<CorpusEntry>& entries) {
  Json a = Json::array();
  for (const auto& e : entries) {
    a.push_back(Json{{"name", e.name}, {"tags", e.tags}, {"expected_count", to_json(e.expected_count)}, {"polytope", e.source}});
  }
  return a;
}

const CorpusEntry& find_entry(const std::vector<CorpusEntry>& entries, const std::string& name) {
  auto it = std::find_if(entries.begin(), entries.end(), [&](const CorpusEntry& e) { return e.name == name; });
  if (it == entries.end()) throw InputError("no corpus entry named " + name);
  return *it;
}

}  // namespace conic
