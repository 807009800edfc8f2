#include "graphgeo/morse.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "graphgeo/kernels.hpp"
#include "graphgeo/random.hpp"
#include "graphgeo/simplicial.hpp"

namespace graphgeo {

VertexFunction::VertexFunction(std::vector<Rational> values) : values_(std::move(values)) {
  std::vector<Rational> sorted = values_;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) throw InputError("vertex function is not injective: value " + dup->str() + " repeats");
}

std::vector<int> VertexFunction::ranks() const {
  std::vector<int> order(values_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return values_[static_cast<std::size_t>(a)] < values_[static_cast<std::size_t>(b)];
  });
  std::vector<int> rank(values_.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  return rank;
}

VertexFunction VertexFunction::negated() const {
  std::vector<Rational> neg;
  neg.reserve(values_.size());
  for (const auto& x : values_) neg.push_back(-x);
  return VertexFunction(std::move(neg));
}

namespace {

void require_match(const Graph& g, std::size_t n) {
  if (n != static_cast<std::size_t>(g.order()))
    throw InputError("vertex function has " + std::to_string(n) + " values for a graph of order " +
                     std::to_string(g.order()));
}

template <typename Pred>
Subgraph filtered_sphere(const Graph& g, Vertex v, Pred keep) {
  std::vector<Vertex> chosen;
  for (Vertex w : g.neighbors(v))
    if (keep(w)) chosen.push_back(w);
  return induced_subgraph(g, chosen);
}

}  // namespace

Subgraph exit_set(const Graph& g, const VertexFunction& f, Vertex v) {
  require_match(g, f.size());
  const Rational& fv = f(v);
  return filtered_sphere(g, v, [&](Vertex w) { return f(w) < fv; });
}

Subgraph entrance_set(const Graph& g, const VertexFunction& f, Vertex v) {
  require_match(g, f.size());
  const Rational& fv = f(v);
  return filtered_sphere(g, v, [&](Vertex w) { return f(w) > fv; });
}

std::int64_t index(const Graph& g, const VertexFunction& f, Vertex v) {
  return 1 - euler_characteristic(clique_complex(exit_set(g, f, v).graph));
}

std::int64_t index_from_ranks(const Graph& g, std::span<const int> ranks, Vertex v) {
  require_match(g, ranks.size());
  const int rv = ranks[static_cast<std::size_t>(v)];
  auto lower = filtered_sphere(g, v, [&](Vertex w) { return ranks[static_cast<std::size_t>(w)] < rv; });
  return 1 - euler_characteristic(clique_complex(lower.graph));
}

std::vector<std::size_t> mixed_counts(const Graph& g, const VertexFunction& f, Vertex v) {
  require_match(g, f.size());
  auto sphere = unit_sphere(g, v);
  auto c = clique_complex(sphere.graph);
  const Rational& fv = f(v);
  std::vector<std::size_t> w(c.layers.size(), 0);
  for (std::size_t k = 0; k < c.layers.size(); ++k) {
    for (const auto& s : c.layers[k]) {
      bool below = false;
      bool above = false;
      for (Vertex x : s.verts) {
        const Rational& fx = f(sphere.map.parent(x));
        below = below || fx < fv;
        above = above || fx > fv;
      }
      if (below && above) ++w[k];
    }
  }
  return w;
}

MorseLocalData morse_local_data(const Graph& g, const VertexFunction& f, Vertex v) {
  MorseLocalData d;
  d.v = v;
  d.exit_sphere = exit_set(g, f, v);
  d.entrance_sphere = entrance_set(g, f, v);
  d.sphere_counts = local_counts(g, v);
  auto exit_complex = clique_complex(d.exit_sphere.graph);
  d.exit_counts = exit_complex.fvec();
  d.entrance_counts = clique_complex(d.entrance_sphere.graph).fvec();
  d.mixed_counts = mixed_counts(g, f, v);
  d.index = 1 - euler_characteristic(exit_complex);
  return d;
}

PoincareHopfReport poincare_hopf_verify(const Graph& g, const VertexFunction& f) {
  require_match(g, f.size());
  PoincareHopfReport r;
  auto ranks = f.ranks();
  r.indices = kernels::parallel::index_table(g, ranks);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (r.indices[static_cast<std::size_t>(v)] != 0) r.critical_points.push_back(v);
    r.index_sum += r.indices[static_cast<std::size_t>(v)];
  }
  r.euler_characteristic = euler_characteristic(clique_complex(g));
  return r;
}

Rational symmetric_index(const Graph& g, const VertexFunction& f, Vertex v) {
  return Rational(index(g, f, v) + index(g, f.negated(), v), 2);
}

VertexFunction random_injective_function(const Graph& g, std::uint64_t seed) {
  std::vector<Rational> values;
  values.reserve(static_cast<std::size_t>(g.order()));
  for (int i = 1; i <= g.order(); ++i) values.emplace_back(i);
  Rng rng(seed);
  rng.shuffle(std::span<Rational>(values));
  return VertexFunction(std::move(values));
}

bool sphere_like(const Graph& g, int order_limit) {
  if (g.order() > order_limit)
    throw TooLargeError("sphere-like check needs exhaustive search; order " + std::to_string(g.order()) +
                        " exceeds the limit " + std::to_string(order_limit));
  if (g.empty()) return true;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!sphere_like(unit_sphere(g, v).graph, order_limit)) return false;
  return kernels::parallel::min_critical_points(g) == 2;
}

}  // namespace graphgeo
