#include "conic/cone.hpp"

#include <algorithm>
#include <stdexcept>

#include "conic/linalg.hpp"

namespace conic {

std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

namespace {

void push_unique(std::vector<IntVector>& list, IntVector v) {
  if (std::find(list.begin(), list.end(), v) == list.end()) list.push_back(std::move(v));
}

// Extreme rays of the pointed part of {y : n . y >= 0}, intersected with the
// orthogonal complement of the lineality space.
std::vector<IntVector> pointed_rays(const std::vector<IntVector>& normals, const std::vector<IntVector>& lineality,
                                    std::size_t d) {
  std::vector<IntVector> rays;
  std::size_t l = lineality.size();
  if (l >= d) return rays;
  std::size_t need = d - 1 - l;
  for (const auto& subset : k_subsets(normals.size(), need)) {
    std::vector<IntVector> rows = lineality;
    for (auto i : subset) rows.push_back(normals[i]);
    RatMatrix m = rows.empty() ? RatMatrix(0, d) : to_rational(IntMatrix::from_rows(rows, d));
    auto ns = nullspace(m);
    if (ns.size() != 1) continue;
    IntVector y = primitive(ns[0]);
    for (int s = 0; s < 2; ++s) {
      bool ok = true;
      for (const auto& n : normals) {
        if (dot(n, y) < 0) {
          ok = false;
          break;
        }
      }
      if (ok) push_unique(rays, y);
      y = negate(y);
    }
  }
  return rays;
}

}  // namespace

RayDecomposition cone_rays(const std::vector<IntVector>& normals, std::size_t dim) {
  RayDecomposition out;
  RatMatrix m = normals.empty() ? RatMatrix(0, dim) : to_rational(IntMatrix::from_rows(normals, dim));
  for (const auto& b : nullspace(m)) out.lineality.push_back(primitive(b));
  out.rays = pointed_rays(normals, out.lineality, dim);
  return out;
}

Cone Cone::from_constraints(RatVector apex, const std::vector<IntVector>& normals) {
  const std::size_t d = apex.size();
  Cone c;
  c.apex_ = std::move(apex);
  for (const auto& n : normals) {
    if (n.size() != d) throw std::invalid_argument("Cone: constraint dimension mismatch");
    Halfspace h = Halfspace::make(n, dot(primitive(n), c.apex_));
    if (std::find(c.constraints_.begin(), c.constraints_.end(), h) == c.constraints_.end()) {
      c.constraints_.push_back(std::move(h));
    }
  }
  std::vector<IntVector> prim;
  for (const auto& h : c.constraints_) prim.push_back(h.normal);
  RayDecomposition rd = cone_rays(prim, d);
  c.rays_ = std::move(rd.rays);
  c.lineality_ = std::move(rd.lineality);
  c.check_consistency();
  return c;
}

Cone Cone::from_generators(RatVector apex, const std::vector<IntVector>& generators) {
  const std::size_t d = apex.size();
  std::vector<IntVector> gens;
  for (const auto& g : generators) {
    if (g.size() != d) throw std::invalid_argument("Cone: generator dimension mismatch");
    push_unique(gens, primitive(g));
  }
  if (rank(gens, d) != d) throw std::invalid_argument("Cone::from_generators: generators do not span");
  std::vector<IntVector> normals;
  if (d == 1) {
    bool pos = false, neg = false;
    for (const auto& g : gens) (g[0] > 0 ? pos : neg) = true;
    if (pos && !neg) normals.push_back({Integer(1)});
    if (neg && !pos) normals.push_back({Integer(-1)});
  } else {
    for (const auto& subset : k_subsets(gens.size(), d - 1)) {
      std::vector<IntVector> rows;
      for (auto i : subset) rows.push_back(gens[i]);
      auto ns = nullspace(to_rational(IntMatrix::from_rows(rows, d)));
      if (ns.size() != 1) continue;
      IntVector n = primitive(ns[0]);
      bool has_pos = false, has_neg = false;
      for (const auto& g : gens) {
        int s = sign(dot(n, g));
        if (s > 0) has_pos = true;
        if (s < 0) has_neg = true;
      }
      if (has_pos && has_neg) continue;
      if (has_neg) n = negate(n);
      if (!has_pos && !has_neg) continue;
      push_unique(normals, n);
    }
  }
  return from_constraints(std::move(apex), normals);
}

Cone Cone::whole_space(RatVector apex) { return from_constraints(std::move(apex), {}); }

std::vector<IntVector> Cone::generators() const {
  std::vector<IntVector> g = rays_;
  for (const auto& b : lineality_) {
    g.push_back(b);
    g.push_back(negate(b));
  }
  return g;
}

bool Cone::contains(const RatVector& x) const {
  for (const auto& h : constraints_)
    if (!h.contains(x)) return false;
  return true;
}

void Cone::check_consistency() const {
  // Every generator must satisfy every homogeneous constraint, and the
  // generators must span the ambient space.
  for (const auto& g : generators()) {
    for (const auto& h : constraints_) {
      if (dot(h.normal, g) < 0) throw std::logic_error("Cone: generator violates constraint");
    }
  }
  if (rank(generators(), dim()) != dim()) {
    throw std::invalid_argument("Cone: not full-dimensional");
  }
}

}  // namespace conic
