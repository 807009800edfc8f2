#include "graphgeo/geometry.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <string>

#include "graphgeo/kernels.hpp"
#include "graphgeo/simplicial.hpp"

namespace graphgeo {

namespace {

// Memo is keyed by the parent-graph vertex set and lives for one top-level
// call. The sphere of v inside the subgraph on S is N(v) ∩ S.
class DimensionSolver {
 public:
  explicit DimensionSolver(const Graph& g) : g_(g) {}

  Rational solve(const std::vector<Vertex>& set) {
    if (set.empty()) return Rational(-1);
    if (auto it = memo_.find(set); it != memo_.end()) return it->second;
    Rational sum;
    std::vector<Vertex> sphere;
    for (Vertex v : set) {
      sphere.clear();
      const auto& nb = g_.neighbors(v);
      std::set_intersection(nb.begin(), nb.end(), set.begin(), set.end(), std::back_inserter(sphere));
      sum += solve(sphere);
    }
    Rational dim = Rational(1) + sum / Rational(static_cast<std::int64_t>(set.size()));
    memo_.emplace(set, dim);
    return dim;
  }

 private:
  const Graph& g_;
  std::map<std::vector<Vertex>, Rational> memo_;
};

}  // namespace

Rational dimension(const Graph& g) {
  std::vector<Vertex> all(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) all[static_cast<std::size_t>(v)] = v;
  return DimensionSolver(g).solve(all);
}

std::optional<int> integral_dimension(const Graph& g) {
  Rational d = dimension(g);
  if (!d.is_integer()) return std::nullopt;
  return static_cast<int>(d.num());
}

Rational curvature_from_counts(std::span<const std::size_t> sphere_counts) {
  // k = 0 term uses V_{-1} = 1
  Rational total(1);
  for (std::size_t k = 1; k <= sphere_counts.size(); ++k) {
    Rational term(static_cast<std::int64_t>(sphere_counts[k - 1]), static_cast<std::int64_t>(k + 1));
    if (k % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

Rational curvature(const Graph& g, Vertex v) { return curvature_from_counts(local_counts(g, v)); }

std::string_view to_string(VertexClass c) {
  switch (c) {
    case VertexClass::Interior:
      return "interior";
    case VertexClass::Boundary:
      return "boundary";
    case VertexClass::Neither:
      return "neither";
  }
  return "neither";
}

VertexClass classify_vertex(const Graph& g, Vertex v, int k) {
  if (!g.valid(v)) throw InputError("vertex " + std::to_string(v) + " out of range");
  if (k < 1) throw InputError("classification level must be at least 1");

  auto sphere = unit_sphere(g, v).graph;
  if (k == 1) {
    if (sphere.order() == 2 && sphere.size() == 0) return VertexClass::Interior;
    if (sphere.order() == 1) return VertexClass::Boundary;
    return VertexClass::Neither;
  }

  if (connected_components(sphere).size() != 1) return VertexClass::Neither;
  if (dimension(sphere) != Rational(k - 1)) return VertexClass::Neither;

  bool any_interior = false;
  bool any_boundary = false;
  for (Vertex w = 0; w < sphere.order(); ++w) {
    switch (classify_vertex(sphere, w, k - 1)) {
      case VertexClass::Interior:
        any_interior = true;
        break;
      case VertexClass::Boundary:
        any_boundary = true;
        break;
      case VertexClass::Neither:
        return VertexClass::Neither;
    }
  }
  if (!any_boundary) return VertexClass::Interior;
  return any_interior ? VertexClass::Boundary : VertexClass::Neither;
}

BoundaryResult boundary_vertices(const Graph& g, int k) {
  if (k < 1) throw InputError("classification level must be at least 1");
  BoundaryResult r;
  r.is_graph_with_boundary = true;
  r.classes.reserve(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) {
    auto c = classify_vertex(g, v, k);
    r.classes.push_back(c);
    if (c == VertexClass::Boundary) r.boundary.push_back(v);
    if (c == VertexClass::Neither) r.is_graph_with_boundary = false;
  }
  return r;
}

GaussBonnetReport gauss_bonnet_report(std::vector<Rational> curvature, std::int64_t euler_characteristic) {
  GaussBonnetReport r;
  r.curvature = std::move(curvature);
  for (const auto& k : r.curvature) r.total += k;
  r.euler_characteristic = euler_characteristic;
  return r;
}

GaussBonnetReport gauss_bonnet_verify(const Graph& g) {
  return gauss_bonnet_report(kernels::parallel::curvature_table(g), euler_characteristic(clique_complex(g)));
}

}  // namespace graphgeo
