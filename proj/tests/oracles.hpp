#pragma once

// Brute-force reference computations for tests. Everything here works from an
// adjacency matrix and subset enumeration and shares no code path with the
// library beyond the Graph accessors and Rational.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "graphgeo/graph.hpp"
#include "graphgeo/rational.hpp"

namespace oracle {

using graphgeo::Graph;
using graphgeo::Rational;
using graphgeo::Vertex;

using AdjMatrix = std::vector<std::vector<bool>>;

inline AdjMatrix adjacency(const Graph& g) {
  AdjMatrix a(static_cast<std::size_t>(g.order()), std::vector<bool>(static_cast<std::size_t>(g.order()), false));
  for (auto [u, v] : g.edges()) {
    a[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
    a[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
  }
  return a;
}

/// All cliques among `verts`, found by checking every subset. Result is
/// grouped by size-1 and each group sorted lexicographically.
inline std::vector<std::vector<std::vector<Vertex>>> cliques_among(const AdjMatrix& a, const std::vector<Vertex>& verts) {
  const std::size_t n = verts.size();
  std::vector<std::vector<std::vector<Vertex>>> levels;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Vertex> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(verts[i]);
    bool clique = true;
    for (std::size_t i = 0; i < s.size() && clique; ++i)
      for (std::size_t j = i + 1; j < s.size() && clique; ++j)
        clique = a[static_cast<std::size_t>(s[i])][static_cast<std::size_t>(s[j])];
    if (!clique) continue;
    std::sort(s.begin(), s.end());
    if (levels.size() < s.size()) levels.resize(s.size());
    levels[s.size() - 1].push_back(s);
  }
  for (auto& l : levels) std::sort(l.begin(), l.end());
  return levels;
}

inline std::vector<std::vector<std::vector<Vertex>>> cliques(const Graph& g) {
  std::vector<Vertex> all(static_cast<std::size_t>(g.order()));
  std::iota(all.begin(), all.end(), 0);
  return cliques_among(adjacency(g), all);
}

inline std::vector<std::size_t> fvec_among(const AdjMatrix& a, const std::vector<Vertex>& verts) {
  std::vector<std::size_t> f;
  for (const auto& l : cliques_among(a, verts)) f.push_back(l.size());
  return f;
}

inline std::vector<std::size_t> fvec(const Graph& g) {
  std::vector<Vertex> all(static_cast<std::size_t>(g.order()));
  std::iota(all.begin(), all.end(), 0);
  return fvec_among(adjacency(g), all);
}

inline std::int64_t chi_among(const AdjMatrix& a, const std::vector<Vertex>& verts) {
  std::int64_t chi = 0;
  auto f = fvec_among(a, verts);
  for (std::size_t k = 0; k < f.size(); ++k) chi += (k % 2 ? -1 : 1) * static_cast<std::int64_t>(f[k]);
  return chi;
}

inline std::int64_t chi(const Graph& g) {
  std::vector<Vertex> all(static_cast<std::size_t>(g.order()));
  std::iota(all.begin(), all.end(), 0);
  return chi_among(adjacency(g), all);
}

inline std::vector<Vertex> neighbors(const AdjMatrix& a, Vertex v) {
  std::vector<Vertex> out;
  for (std::size_t w = 0; w < a.size(); ++w)
    if (a[static_cast<std::size_t>(v)][w]) out.push_back(static_cast<Vertex>(w));
  return out;
}

/// Index of v for the vertex order given by ranks.
inline std::int64_t index(const Graph& g, const std::vector<int>& ranks, Vertex v) {
  auto a = adjacency(g);
  std::vector<Vertex> lower;
  for (Vertex w : neighbors(a, v))
    if (ranks[static_cast<std::size_t>(w)] < ranks[static_cast<std::size_t>(v)]) lower.push_back(w);
  return 1 - chi_among(a, lower);
}

/// Fewest critical points over every vertex ordering.
inline int min_critical_points(const Graph& g) {
  const int n = g.order();
  if (n == 0) return 0;
  std::vector<int> ranks(static_cast<std::size_t>(n));
  std::iota(ranks.begin(), ranks.end(), 0);
  int best = n + 1;
  do {
    int crit = 0;
    for (Vertex v = 0; v < n; ++v) crit += index(g, ranks, v) != 0 ? 1 : 0;
    best = std::min(best, crit);
  } while (std::next_permutation(ranks.begin(), ranks.end()));
  return best;
}

/// Curvature from brute-force sphere counts.
inline Rational curvature(const Graph& g, Vertex v) {
  auto a = adjacency(g);
  auto f = fvec_among(a, neighbors(a, v));
  Rational k(1);
  for (std::size_t i = 0; i < f.size(); ++i) {
    Rational term(static_cast<std::int64_t>(f[i]), static_cast<std::int64_t>(i + 2));
    k = (i % 2 == 0) ? k - term : k + term;
  }
  return k;
}

/// Rank over Q by Gauss-Jordan elimination on rationals.
inline std::size_t rank(std::vector<std::vector<Rational>> m) {
  std::size_t r = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == Rational(0)) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == Rational(0)) continue;
      Rational factor = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
    }
    ++r;
  }
  return r;
}

/// Betti numbers from coboundary ranks built directly from subset cliques.
inline std::vector<std::int64_t> betti(const Graph& g) {
  auto levels = cliques(g);
  auto position = [&](std::size_t k, const std::vector<Vertex>& s) {
    return static_cast<std::size_t>(std::lower_bound(levels[k].begin(), levels[k].end(), s) - levels[k].begin());
  };
  std::vector<std::size_t> ranks(levels.size(), 0);
  for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
    std::vector<std::vector<Rational>> m(levels[k + 1].size(), std::vector<Rational>(levels[k].size()));
    for (std::size_t j = 0; j < levels[k + 1].size(); ++j) {
      const auto& s = levels[k + 1][j];
      for (std::size_t i = 0; i < s.size(); ++i) {
        auto face = s;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        m[j][position(k, face)] = Rational(i % 2 == 0 ? 1 : -1);
      }
    }
    ranks[k] = rank(m);
  }
  std::vector<std::int64_t> b;
  for (std::size_t k = 0; k < levels.size(); ++k)
    b.push_back(static_cast<std::int64_t>(levels[k].size()) - static_cast<std::int64_t>(ranks[k]) -
                (k ? static_cast<std::int64_t>(ranks[k - 1]) : 0));
  return b;
}

}  // namespace oracle
