#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "conic/gf.hpp"
#include "conic/nonsimple_polar.hpp"

namespace conic {

using Json = nlohmann::ordered_json;

// Malformed user input (files, flags). Reported with exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Rationals travel as strings "p/q" or "p"; JSON integers are accepted on
// input, floats never.
Json to_json(const Rational& x);
Json to_json(const Integer& x);
Json to_json(const RatVector& v);
Json to_json(const IntVector& v);
Rational rational_from_json(const Json& j);
RatVector vector_from_json(const Json& j, std::size_t dim);

// {"dim": d, "vertices": [[...], ...]} or
// {"dim": d, "inequalities": [{"normal": [...], "offset": b}, ...]} meaning normal . x >= offset.
Polytope polytope_from_json(const Json& j);
Json polytope_to_json(const Polytope& p);
Json read_json_file(const std::string& path);
Polytope load_polytope(const std::string& path);

Json to_json(const Halfspace& h);
Json to_json(const LocallyClosedPiece& piece);
Json to_json(const IntPoly& poly);
Json to_json(const IndicatorSum& s);
Json to_json(const RationalGF& g);
Json to_json(const LiftedTriangulation& tri);

// "4,2,0"
Functional parse_functional(const std::string& text, std::size_t dim);
// "1,1/2,0"
std::vector<Rational> parse_rational_list(const std::string& text);
// ["v0=1,1,0,0", ...]
HeightMap parse_heights(const std::vector<std::string>& specs);
// "lo,hi" -> cube box
Box parse_box(const std::string& text, std::size_t dim);

}  // namespace conic
