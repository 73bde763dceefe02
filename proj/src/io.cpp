#include "conic/io.hpp"

#include <fstream>
#include <sstream>

namespace conic {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

Rational parse_field(const std::string& text, const std::string& what) {
  try {
    return parse_rational(trim(text));
  } catch (const std::invalid_argument& e) {
    throw InputError(what + ": " + e.what());
  }
}

}  // namespace

Json to_json(const Rational& x) { return to_string(x); }
Json to_json(const Integer& x) { return to_string(x); }

Json to_json(const RatVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Json to_json(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_field(j.get<std::string>(), "rational");
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Rational(std::to_string(j.get<std::uint64_t>()))
                                  : Rational(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_number_float()) throw InputError("floating point value " + j.dump() + " not allowed; use \"p/q\"");
  throw InputError("expected a rational, got " + j.dump());
}

RatVector vector_from_json(const Json& j, std::size_t dim) {
  if (!j.is_array()) throw InputError("expected an array, got " + j.dump());
  if (j.size() != dim) {
    throw InputError("expected " + std::to_string(dim) + " coordinates, got " + std::to_string(j.size()));
  }
  RatVector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

Polytope polytope_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("polytope must be a JSON object");
  if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<std::int64_t>() < 1) {
    throw InputError("polytope needs a positive integer \"dim\"");
  }
  const auto dim = j["dim"].get<std::size_t>();
  bool has_v = j.contains("vertices"), has_h = j.contains("inequalities");
  if (has_v == has_h) throw InputError("polytope needs exactly one of \"vertices\" or \"inequalities\"");
  if (has_v) {
    if (!j["vertices"].is_array() || j["vertices"].empty()) throw InputError("\"vertices\" must be a nonempty array");
    std::vector<RatVector> pts;
    for (const auto& v : j["vertices"]) pts.push_back(vector_from_json(v, dim));
    return Polytope::from_vertices(pts);
  }
  if (!j["inequalities"].is_array() || j["inequalities"].empty()) {
    throw InputError("\"inequalities\" must be a nonempty array");
  }
  std::vector<Halfspace> hs;
  for (const auto& h : j["inequalities"]) {
    if (!h.is_object() || !h.contains("normal") || !h.contains("offset")) {
      throw InputError("each inequality needs \"normal\" and \"offset\"");
    }
    RatVector n = vector_from_json(h["normal"], dim);
    if (is_zero(n)) throw InputError("inequality with zero normal");
    hs.push_back(Halfspace::make(n, rational_from_json(h["offset"])));
  }
  return Polytope::from_halfspaces(hs);
}

Json polytope_to_json(const Polytope& p) {
  Json j;
  j["dim"] = p.dim();
  Json verts = Json::array();
  for (const auto& v : p.vertices()) verts.push_back(to_json(v));
  j["vertices"] = verts;
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": invalid JSON: " + e.what());
  }
}

Polytope load_polytope(const std::string& path) {
  Json j = read_json_file(path);
  if (j.is_object() && j.contains("polytope")) j = j["polytope"];
  return polytope_from_json(j);
}

Json to_json(const Halfspace& h) {
  return Json{{"normal", to_json(h.normal)}, {"offset", to_json(h.offset)}, {"sense", h.sense == Sense::Ge ? "ge" : "gt"}};
}

Json to_json(const LocallyClosedPiece& piece) {
  Json a = Json::array();
  for (const auto& h : piece.constraints()) a.push_back(to_json(h));
  return a;
}

Json to_json(const IntPoly& poly) {
  Json a = Json::array();
  for (const auto& c : poly.coefficients()) a.push_back(to_json(c));
  return a;
}

Json to_json(const IndicatorSum& s) {
  Json terms = Json::array();
  for (const auto& t : s.terms()) {
    terms.push_back(Json{{"coeff", to_json(t.coeff)}, {"coeff_text", t.coeff.to_string()}, {"constraints", to_json(t.piece)}});
  }
  return Json{{"kind", "indicator_sum"}, {"dim", s.dim()}, {"terms", terms}};
}

Json to_json(const RationalGF& g) {
  Json terms = Json::array();
  for (const auto& t : g.terms()) {
    Json num = Json::array(), den = Json::array();
    for (const auto& a : t.numerator) num.push_back(to_json(a));
    for (const auto& b : t.denominators) den.push_back(to_json(b));
    terms.push_back(Json{{"coeff", to_json(t.coeff)}, {"numerator", num}, {"denominators", den}});
  }
  return Json{{"kind", "rational_gf"}, {"dim", g.dim()}, {"text", g.to_string()}, {"terms", terms}};
}

Json to_json(const LiftedTriangulation& tri) {
  Json rays = Json::array(), cells = Json::array(), certs = Json::array();
  for (const auto& r : tri.rays) rays.push_back(to_json(r));
  for (const auto& c : tri.cells) cells.push_back(c);
  for (const auto& c : tri.certificates) certs.push_back(to_json(c));
  return Json{{"rays", rays}, {"heights", to_json(RatVector(tri.heights))}, {"cells", cells}, {"certificates", certs}};
}

Functional parse_functional(const std::string& text, std::size_t dim) {
  auto parts = split(text, ',');
  if (parts.size() != dim) {
    throw InputError("--xi: expected " + std::to_string(dim) + " comma-separated integers, got \"" + text + "\"");
  }
  IntVector v;
  for (const auto& p : parts) {
    Rational x = parse_field(p, "--xi");
    if (x.get_den() != 1) throw InputError("--xi: entries must be integers");
    v.push_back(x.get_num());
  }
  if (is_zero(v)) throw InputError("--xi: functional must be nonzero");
  return Functional(v);
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& p : split(text, ',')) out.push_back(parse_field(p, "list entry"));
  if (out.empty()) throw InputError("empty list");
  return out;
}

HeightMap parse_heights(const std::vector<std::string>& specs) {
  HeightMap out;
  for (const auto& spec : specs) {
    auto eq = spec.find('=');
    if (eq == std::string::npos || eq < 2 || spec[0] != 'v') {
      throw InputError("--heights: expected v<index>=h1,h2,..., got \"" + spec + "\"");
    }
    std::size_t index = 0;
    try {
      std::size_t used = 0;
      index = std::stoul(spec.substr(1, eq - 1), &used);
      if (used != eq - 1) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw InputError("--heights: bad vertex index in \"" + spec + "\"");
    }
    if (out.count(index)) throw InputError("--heights: vertex v" + std::to_string(index) + " given twice");
    out[index] = parse_rational_list(spec.substr(eq + 1));
  }
  return out;
}

Box parse_box(const std::string& text, std::size_t dim) {
  auto parts = split(text, ',');
  if (parts.size() != 2) throw InputError("--box: expected lo,hi");
  Rational lo = parse_field(parts[0], "--box"), hi = parse_field(parts[1], "--box");
  if (lo > hi) throw InputError("--box: lo exceeds hi");
  return cube_box(dim, lo, hi);
}

}  // namespace conic
