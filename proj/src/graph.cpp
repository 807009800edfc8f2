#include "graphgeo/graph.hpp"

#include <algorithm>
#include <string>

namespace graphgeo {

Graph::Graph(int n) {
  if (n < 0) throw InputError("negative vertex count");
  adj_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) {
    if (!valid(u) || !valid(v))
      throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range");
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (std::size_t v = 0; v < adj_.size(); ++v) {
    auto& a = adj_[v];
    std::sort(a.begin(), a.end());
    auto dup = std::adjacent_find(a.begin(), a.end());
    if (dup != a.end())
      throw InputError("duplicate edge (" + std::to_string(v) + ", " + std::to_string(*dup) + ")");
  }
  num_edges_ = edges.size();
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
  if (!valid(v)) throw InputError("vertex " + std::to_string(v) + " out of range");
  return adj_[static_cast<std::size_t>(v)];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& a = neighbors(u);
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adj_[static_cast<std::size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  std::vector<Vertex> verts(s.begin(), s.end());
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  for (Vertex v : verts)
    if (!g.valid(v)) throw InputError("vertex " + std::to_string(v) + " out of range");

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (Vertex w : g.neighbors(verts[i])) {
      if (w <= verts[i]) continue;
      auto it = std::lower_bound(verts.begin(), verts.end(), w);
      if (it != verts.end() && *it == w)
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(it - verts.begin()));
    }
  }
  Graph sub(static_cast<int>(verts.size()), edges);
  return {std::move(sub), VertexMap{std::move(verts)}};
}

Subgraph unit_sphere(const Graph& g, Vertex v) { return induced_subgraph(g, g.neighbors(v)); }

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> comps;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<Vertex> comp;
    stack.push_back(s);
    seen[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + a.order(), v + a.order());
  return Graph(a.order() + b.order(), edges);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != static_cast<std::size_t>(g.order())) throw InputError("relabeling has wrong length");
  std::vector<char> hit(perm.size(), 0);
  for (Vertex p : perm) {
    if (p < 0 || p >= g.order() || hit[static_cast<std::size_t>(p)])
      throw InputError("relabeling is not a permutation");
    hit[static_cast<std::size_t>(p)] = 1;
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return Graph(g.order(), edges);
}

}  // namespace graphgeo
