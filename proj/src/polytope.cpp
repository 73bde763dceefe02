#include "conic/polytope.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "conic/linalg.hpp"

namespace conic {

int affine_rank(const std::vector<RatVector>& points) {
  if (points.empty()) return -1;
  std::size_t d = points[0].size();
  RatMatrix m(points.size() - 1, d);
  for (std::size_t i = 1; i < points.size(); ++i)
    for (std::size_t j = 0; j < d; ++j) m(i - 1, j) = points[i][j] - points[0][j];
  return static_cast<int>(rank(m));
}

namespace {

std::size_t common_dimension(const std::vector<RatVector>& points) {
  if (points.empty()) throw DegenerateInputError("polytope: no points given");
  std::size_t d = points[0].size();
  if (d == 0) throw DegenerateInputError("polytope: dimension must be positive");
  for (const auto& p : points) {
    if (p.size() != d) throw std::invalid_argument("polytope: points of mixed dimension");
  }
  return d;
}

std::vector<RatVector> select(const std::vector<RatVector>& points, const std::vector<std::size_t>& idx) {
  std::vector<RatVector> out;
  for (auto i : idx) out.push_back(points[i]);
  return out;
}

}  // namespace

Polytope::Polytope(std::size_t dim, std::vector<RatVector> vertices, std::vector<Halfspace> facets)
    : dim_(dim), vertices_(std::move(vertices)), facets_(std::move(facets)) {
  vertex_facets_.assign(vertices_.size(), {});
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    for (std::size_t f = 0; f < facets_.size(); ++f)
      if (facets_[f].is_tight(vertices_[v])) vertex_facets_[v].push_back(f);
  build_face_lattice();
}

void Polytope::build_face_lattice() {
  std::vector<std::vector<std::size_t>> facet_vertices(facets_.size());
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    for (auto f : vertex_facets_[v]) facet_vertices[f].push_back(v);

  std::vector<std::size_t> all(vertices_.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;

  std::map<std::vector<std::size_t>, bool> seen;
  std::deque<std::vector<std::size_t>> queue{all};
  seen[all] = true;
  while (!queue.empty()) {
    auto face = queue.front();
    queue.pop_front();
    for (const auto& fv : facet_vertices) {
      std::vector<std::size_t> meet;
      std::set_intersection(face.begin(), face.end(), fv.begin(), fv.end(), std::back_inserter(meet));
      if (meet.empty() || meet == face || seen.count(meet)) continue;
      seen[meet] = true;
      queue.push_back(meet);
    }
  }

  faces_.clear();
  for (const auto& [verts, unused] : seen) {
    Face face;
    face.vertices = verts;
    face.dim = static_cast<std::size_t>(affine_rank(select(vertices_, verts)));
    for (std::size_t f = 0; f < facets_.size(); ++f) {
      if (std::includes(facet_vertices[f].begin(), facet_vertices[f].end(), verts.begin(), verts.end())) {
        face.facets.push_back(f);
      }
    }
    faces_.push_back(std::move(face));
  }
  std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
    return a.dim != b.dim ? a.dim < b.dim : a.vertices < b.vertices;
  });
  vertex_face_.assign(vertices_.size(), 0);
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    if (faces_[i].dim == 0) vertex_face_[faces_[i].vertices[0]] = i;
    if (faces_[i].dim == dim_) whole_face_ = i;
  }
}

Polytope Polytope::from_vertices(const std::vector<RatVector>& input) {
  std::size_t d = common_dimension(input);
  std::vector<RatVector> points;
  for (const auto& p : input)
    if (std::find(points.begin(), points.end(), p) == points.end()) points.push_back(p);
  if (affine_rank(points) != static_cast<int>(d)) {
    throw DegenerateInputError("polytope_from_vertices: points do not affinely span Q^" + std::to_string(d));
  }

  std::vector<Halfspace> facets;
  for (const auto& subset : k_subsets(points.size(), d)) {
    RatMatrix m(d - 1, d);
    for (std::size_t i = 1; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) m(i - 1, j) = points[subset[i]][j] - points[subset[0]][j];
    auto ns = nullspace(m);
    if (ns.size() != 1) continue;
    IntVector n = primitive(ns[0]);
    Rational b = dot(n, points[subset[0]]);
    bool pos = false, neg = false;
    for (const auto& p : points) {
      int s = sign(dot(n, p) - b);
      if (s > 0) pos = true;
      if (s < 0) neg = true;
    }
    if (pos && neg) continue;
    Halfspace h = neg ? Halfspace{negate(n), -b, Sense::Ge} : Halfspace{n, b, Sense::Ge};
    if (std::find(facets.begin(), facets.end(), h) == facets.end()) facets.push_back(std::move(h));
  }

  std::vector<RatVector> vertices;
  for (const auto& p : points) {
    std::vector<IntVector> tight;
    for (const auto& h : facets)
      if (h.is_tight(p)) tight.push_back(h.normal);
    if (rank(tight, d) == d) vertices.push_back(p);
  }
  return Polytope(d, std::move(vertices), std::move(facets));
}

Polytope Polytope::from_halfspaces(const std::vector<Halfspace>& input) {
  if (input.empty()) throw DegenerateInputError("polytope_from_halfspaces: no halfspaces (unbounded)");
  std::size_t d = input[0].normal.size();
  if (d == 0) throw DegenerateInputError("polytope: dimension must be positive");
  std::vector<Halfspace> hs;
  for (const auto& h : input) {
    if (h.normal.size() != d) throw std::invalid_argument("polytope_from_halfspaces: mixed dimensions");
    if (h.sense != Sense::Ge) throw std::invalid_argument("polytope_from_halfspaces: facets must be closed");
    Halfspace n = Halfspace::make(h.normal, h.offset);
    if (std::find(hs.begin(), hs.end(), n) == hs.end()) hs.push_back(std::move(n));
  }

  std::vector<IntVector> normals;
  for (const auto& h : hs) normals.push_back(h.normal);
  RayDecomposition recession = cone_rays(normals, d);
  if (!recession.lineality.empty() || !recession.rays.empty()) {
    throw DegenerateInputError("polytope_from_halfspaces: intersection is unbounded");
  }

  std::vector<RatVector> vertices;
  for (const auto& subset : k_subsets(hs.size(), d)) {
    RatMatrix a(d, d);
    RatVector b(d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) a(i, j) = hs[subset[i]].normal[j];
      b[i] = hs[subset[i]].offset;
    }
    auto x = solve_linear(a, b);
    if (!x) continue;
    bool feasible = std::all_of(hs.begin(), hs.end(), [&](const Halfspace& h) { return h.contains(*x); });
    if (feasible && std::find(vertices.begin(), vertices.end(), *x) == vertices.end()) {
      vertices.push_back(std::move(*x));
    }
  }
  if (vertices.empty()) throw DegenerateInputError("polytope_from_halfspaces: intersection is empty");
  if (affine_rank(vertices) != static_cast<int>(d)) {
    throw DegenerateInputError("polytope_from_halfspaces: intersection is lower-dimensional");
  }

  std::vector<Halfspace> facets;
  for (const auto& h : hs) {
    std::vector<RatVector> tight;
    for (const auto& v : vertices)
      if (h.is_tight(v)) tight.push_back(v);
    if (affine_rank(tight) == static_cast<int>(d) - 1) facets.push_back(h);
  }
  return Polytope(d, std::move(vertices), std::move(facets));
}

std::vector<std::pair<std::size_t, std::size_t>> Polytope::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& f : faces_)
    if (f.dim == 1) out.emplace_back(f.vertices[0], f.vertices[1]);
  return out;
}

bool Polytope::contains(const RatVector& x) const {
  return std::all_of(facets_.begin(), facets_.end(), [&](const Halfspace& h) { return h.contains(x); });
}

bool Polytope::in_interior(const RatVector& x) const {
  return std::all_of(facets_.begin(), facets_.end(), [&](const Halfspace& h) { return h.slack(x) > 0; });
}

RatVector Polytope::barycenter() const {
  RatVector c(dim_, Rational(0));
  for (const auto& v : vertices_) c = add(c, v);
  return scale(c, Rational(1, vertices_.size()));
}

std::pair<RatVector, RatVector> Polytope::bounding_box() const {
  RatVector lo = vertices_[0], hi = vertices_[0];
  for (const auto& v : vertices_)
    for (std::size_t i = 0; i < dim_; ++i) {
      if (v[i] < lo[i]) lo[i] = v[i];
      if (v[i] > hi[i]) hi[i] = v[i];
    }
  return {lo, hi};
}

Polytope Polytope::translated(const RatVector& shift) const {
  if (shift.size() != dim_) throw std::invalid_argument("translated: dimension mismatch");
  std::vector<RatVector> verts;
  for (const auto& v : vertices_) verts.push_back(add(v, shift));
  std::vector<Halfspace> facets;
  for (const auto& h : facets_) facets.push_back({h.normal, h.offset + dot(h.normal, shift), h.sense});
  return Polytope(dim_, std::move(verts), std::move(facets));
}

Polytope Polytope::dilated(const Rational& factor) const {
  if (factor <= 0) throw std::invalid_argument("dilated: factor must be positive");
  std::vector<RatVector> verts;
  for (const auto& v : vertices_) verts.push_back(scale(v, factor));
  std::vector<Halfspace> facets;
  for (const auto& h : facets_) facets.push_back({h.normal, h.offset * factor, h.sense});
  return Polytope(dim_, std::move(verts), std::move(facets));
}

Cone tangent_cone(const Polytope& p, std::size_t face) {
  if (face >= p.faces().size()) throw std::invalid_argument("tangent_cone: face index out of range");
  const Face& f = p.faces()[face];
  RatVector apex(p.dim(), Rational(0));
  for (auto v : f.vertices) apex = add(apex, p.vertices()[v]);
  apex = scale(apex, Rational(1, f.vertices.size()));
  std::vector<IntVector> normals;
  for (auto i : f.facets) normals.push_back(p.facets()[i].normal);
  return Cone::from_constraints(std::move(apex), normals);
}

Cone vertex_tangent_cone(const Polytope& p, std::size_t vertex) {
  if (vertex >= p.vertices().size()) throw std::invalid_argument("not a vertex index");
  return tangent_cone(p, p.vertex_face(vertex));
}

Cone normal_cone(const Polytope& p, std::size_t vertex) {
  if (vertex >= p.vertices().size()) throw std::invalid_argument("normal_cone: not a vertex index");
  std::vector<IntVector> normals;
  for (auto f : p.tight_facets(vertex)) normals.push_back(p.facets()[f].normal);
  return Cone::from_generators(RatVector(p.dim(), Rational(0)), normals);
}

bool is_simple_vertex(const Polytope& p, std::size_t vertex) {
  const auto& tight = p.tight_facets(vertex);
  if (tight.size() != p.dim()) return false;
  std::vector<IntVector> normals;
  for (auto f : tight) normals.push_back(p.facets()[f].normal);
  return rank(normals, p.dim()) == p.dim();
}

bool is_simple(const Polytope& p) {
  for (std::size_t v = 0; v < p.vertices().size(); ++v)
    if (!is_simple_vertex(p, v)) return false;
  return true;
}

Polytope polar_dual(const Polytope& p) {
  RatVector origin(p.dim(), Rational(0));
  if (!p.in_interior(origin)) throw std::invalid_argument("polar_dual: origin is not in the interior");
  // n . x >= b with b < 0 rescales to (n / b) . x <= 1.
  std::vector<RatVector> dual_vertices;
  for (const auto& h : p.facets()) dual_vertices.push_back(scale(to_rational(h.normal), 1 / h.offset));
  Polytope dual = Polytope::from_vertices(dual_vertices);
  if (dual.vertices().size() != p.facets().size() || dual.facets().size() != p.vertices().size()) {
    throw std::logic_error("polar_dual: vertex/facet counts do not swap");
  }
  // Each facet of the dual is <y, x> <= 1 for exactly one vertex x of P.
  for (const auto& x : p.vertices()) {
    Halfspace expected = Halfspace::make(scale(x, -1), Rational(-1));
    if (std::find(dual.facets().begin(), dual.facets().end(), expected) == dual.facets().end()) {
      throw std::logic_error("polar_dual: vertex without dual facet");
    }
  }
  return dual;
}

Centering center_at_barycenter(const Polytope& p) {
  RatVector shift = p.barycenter();
  return {p.translated(scale(shift, -1)), shift};
}

}  // namespace conic
