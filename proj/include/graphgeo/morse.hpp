#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "graphgeo/graph.hpp"
#include "graphgeo/rational.hpp"

namespace graphgeo {

/// Injective rational-valued function on the vertices of a graph.
class VertexFunction {
 public:
  VertexFunction() = default;
  /// Throws InputError when two vertices share a value.
  explicit VertexFunction(std::vector<Rational> values);

  [[nodiscard]] std::size_t size() const { return values_.size(); }
  [[nodiscard]] const Rational& operator()(Vertex v) const { return values_.at(static_cast<std::size_t>(v)); }
  [[nodiscard]] const std::vector<Rational>& values() const { return values_; }

  /// rank[v] = position of f(v) in increasing order (0-based).
  [[nodiscard]] std::vector<int> ranks() const;
  [[nodiscard]] VertexFunction negated() const;

  friend bool operator==(const VertexFunction&, const VertexFunction&) = default;

 private:
  std::vector<Rational> values_;
};

/// Sub-sphere of neighbors with strictly smaller value.
Subgraph exit_set(const Graph& g, const VertexFunction& f, Vertex v);
/// Sub-sphere of neighbors with strictly larger value.
Subgraph entrance_set(const Graph& g, const VertexFunction& f, Vertex v);

/// 1 - chi(exit set). A vertex is critical iff its index is nonzero.
std::int64_t index(const Graph& g, const VertexFunction& f, Vertex v);

/// Index computed directly from vertex ranks; the rank-based form every other
/// index routine reduces to.
std::int64_t index_from_ranks(const Graph& g, std::span<const int> ranks, Vertex v);

/// W_k(v): k-simplices of the unit sphere having a vertex below and a vertex
/// above f(v).
std::vector<std::size_t> mixed_counts(const Graph& g, const VertexFunction& f, Vertex v);

struct MorseLocalData {
  Vertex v = 0;
  Subgraph exit_sphere;
  Subgraph entrance_sphere;
  std::vector<std::size_t> sphere_counts;    // V_k(v)
  std::vector<std::size_t> exit_counts;      // V_k^-(v)
  std::vector<std::size_t> entrance_counts;  // V_k^+(v)
  std::vector<std::size_t> mixed_counts;     // W_k(v)
  std::int64_t index = 0;
};

MorseLocalData morse_local_data(const Graph& g, const VertexFunction& f, Vertex v);

struct PoincareHopfReport {
  std::vector<std::int64_t> indices;
  std::vector<Vertex> critical_points;
  std::int64_t index_sum = 0;
  std::int64_t euler_characteristic = 0;

  [[nodiscard]] bool passed() const { return index_sum == euler_characteristic; }
};

PoincareHopfReport poincare_hopf_verify(const Graph& g, const VertexFunction& f);

/// (i_f(v) + i_{-f}(v)) / 2.
Rational symmetric_index(const Graph& g, const VertexFunction& f, Vertex v);

/// Random permutation of 1..n as vertex values; a pure function of the seed.
VertexFunction random_injective_function(const Graph& g, std::uint64_t seed);

/// Raised by sphere_like instead of guessing on graphs above the order limit.
class TooLargeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultSphereLikeLimit = 8;

/// Discrete Reeb test: g is empty, or every unit sphere is sphere-like and the
/// fewest critical points any injective function can have is exactly 2.
/// Exhaustive over all vertex orderings.
bool sphere_like(const Graph& g, int order_limit = kDefaultSphereLikeLimit);

}  // namespace graphgeo
