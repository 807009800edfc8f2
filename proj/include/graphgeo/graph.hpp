#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace graphgeo {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Invalid caller input: out-of-range ids, malformed files, violated
/// preconditions. The CLI maps it to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finite simple graph on vertices 0..n-1 with sorted adjacency lists.
/// Immutable after construction.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n);
  /// Rejects self-loops, duplicate edges and out-of-range endpoints.
  Graph(int n, std::span<const Edge> edges);

  [[nodiscard]] int order() const { return static_cast<int>(adj_.size()); }
  [[nodiscard]] std::size_t size() const { return num_edges_; }
  [[nodiscard]] bool empty() const { return adj_.empty(); }

  [[nodiscard]] const std::vector<Vertex>& neighbors(Vertex v) const;
  [[nodiscard]] int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  [[nodiscard]] bool adjacent(Vertex u, Vertex v) const;
  [[nodiscard]] bool valid(Vertex v) const { return v >= 0 && v < order(); }

  /// Edges as (u, v) with u < v in lexicographic order.
  [[nodiscard]] std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t num_edges_ = 0;
};

/// Relabeling of an induced subgraph: sub-vertex i corresponds to
/// parent vertex forward[i]. forward is strictly ascending.
struct VertexMap {
  std::vector<Vertex> forward;

  [[nodiscard]] Vertex parent(Vertex sub) const { return forward.at(static_cast<std::size_t>(sub)); }
  [[nodiscard]] std::size_t size() const { return forward.size(); }
};

struct Subgraph {
  Graph graph;
  VertexMap map;
};

/// Subgraph generated by the vertex set `s` (duplicates ignored). Vertices
/// are relabeled in ascending parent order.
Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> s);

/// Graph generated by the neighbors of v.
Subgraph unit_sphere(const Graph& g, Vertex v);

/// Connected components, each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// Disjoint union with b's vertices shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

/// Graph with vertex v renamed to perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

}  // namespace graphgeo
