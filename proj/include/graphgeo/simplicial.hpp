#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graphgeo/graph.hpp"

namespace graphgeo {

class VertexFunction;

/// Complete subgraph K_{k+1} stored as its strictly ascending vertex tuple.
struct Simplex {
  std::vector<Vertex> verts;

  [[nodiscard]] int dim() const { return static_cast<int>(verts.size()) - 1; }
  /// Face obtained by dropping the i-th vertex.
  [[nodiscard]] Simplex face(std::size_t i) const;

  friend auto operator<=>(const Simplex&, const Simplex&) = default;
  friend bool operator==(const Simplex&, const Simplex&) = default;
};

/// Sorts an arbitrary vertex tuple into a simplex and reports the sign of the
/// sorting permutation. The sign is 0 when a vertex repeats.
struct OrientedSimplex {
  Simplex simplex;
  int sign = 1;
};
OrientedSimplex canonicalize(std::span<const Vertex> tuple);

/// Whitney complex of a graph: layer k holds every K_{k+1}, sorted
/// lexicographically. Trailing empty layers are not stored, so the empty
/// graph has no layers at all.
struct CliqueComplex {
  std::vector<std::vector<Simplex>> layers;
  /// Set when a max_dim cutoff dropped a nonempty layer.
  bool truncated = false;

  [[nodiscard]] std::vector<std::size_t> fvec() const;
  [[nodiscard]] int top_dim() const { return static_cast<int>(layers.size()) - 1; }
  /// Empty span for levels outside 0..top_dim().
  [[nodiscard]] std::span<const Simplex> layer(int k) const;
  /// Position of s inside its layer.
  [[nodiscard]] std::optional<std::size_t> find(const Simplex& s) const;
  [[nodiscard]] std::size_t total_simplices() const;
};

/// All cliques of g, optionally cut off above max_dim.
CliqueComplex clique_complex(const Graph& g, std::optional<int> max_dim = std::nullopt);

/// Alternating sum of the f-vector. Refuses truncated complexes.
std::int64_t euler_characteristic(const CliqueComplex& c);

/// V_k(v): number of k-simplices in the unit sphere of v. V_0 is the degree.
std::vector<std::size_t> local_counts(const Graph& g, Vertex v);

/// One identity instance `lhs == rhs` at level k.
struct IdentityRow {
  int k = 0;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;

  [[nodiscard]] bool holds() const { return lhs == rhs; }
};

struct IdentityReport {
  std::string name;
  std::vector<IdentityRow> rows;

  [[nodiscard]] bool passed() const;
};

/// sum_v V_{k-1}(v) == (k+1) v_k for every level k >= 1. Local counts are
/// taken from each unit sphere's own clique complex.
IdentityReport check_transfer(const Graph& g, const CliqueComplex& c);

/// sum_v W_k(v) == k v_{k+1} for every level k >= 1, with W_k the straddling
/// simplex counts of f.
IdentityReport check_intermediate(const Graph& g, const CliqueComplex& c, const VertexFunction& f);

}  // namespace graphgeo
