#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "graphgeo/graph.hpp"
#include "graphgeo/rational.hpp"

namespace graphgeo {

/// Inductive dimension: -1 for the empty graph, otherwise one plus the
/// average dimension of the unit spheres.
Rational dimension(const Graph& g);

/// The dimension as an int when it is integral.
std::optional<int> integral_dimension(const Graph& g);

/// Curvature from unit-sphere counts V_0, V_1, ...:
/// 1 - V_0/2 + V_1/3 - V_2/4 + ...
Rational curvature_from_counts(std::span<const std::size_t> sphere_counts);

Rational curvature(const Graph& g, Vertex v);

enum class VertexClass { Interior, Boundary, Neither };

std::string_view to_string(VertexClass c);

/// Interior/boundary classification of v in a graph treated as k-dimensional.
///
/// k = 1: Interior iff the unit sphere is two non-adjacent vertices, Boundary
/// iff it is a single vertex. k >= 2: the unit sphere must be connected and
/// of dimension k-1; v is Interior when every sphere vertex is Interior at
/// level k-1 and Boundary when all are Interior or Boundary with both kinds
/// present. Anything else is Neither.
VertexClass classify_vertex(const Graph& g, Vertex v, int k);

struct BoundaryResult {
  std::vector<VertexClass> classes;
  std::vector<Vertex> boundary;
  /// No vertex classified as Neither.
  bool is_graph_with_boundary = false;
};

BoundaryResult boundary_vertices(const Graph& g, int k);

struct GaussBonnetReport {
  std::vector<Rational> curvature;
  Rational total;
  std::int64_t euler_characteristic = 0;

  [[nodiscard]] bool passed() const { return total == Rational(euler_characteristic); }
};

GaussBonnetReport gauss_bonnet_verify(const Graph& g);

/// Builds a report from an explicit curvature table (sums it exactly).
GaussBonnetReport gauss_bonnet_report(std::vector<Rational> curvature, std::int64_t euler_characteristic);

}  // namespace graphgeo
