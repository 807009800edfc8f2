#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "graphgeo/generators.hpp"
#include "graphgeo/graph.hpp"

namespace support {

inline graphgeo::Graph gen(const std::string& name, std::vector<std::int64_t> params = {},
                           std::optional<std::uint64_t> seed = std::nullopt) {
  return graphgeo::generate(graphgeo::GeneratorSpec{name, std::move(params), seed});
}

inline graphgeo::Graph from_edges(int n, std::initializer_list<graphgeo::Edge> edges) {
  std::vector<graphgeo::Edge> e(edges);
  return graphgeo::Graph(n, e);
}

/// Seeded G(n, p) samples with n <= 25 and p in {1/4, 1/2, 3/4}.
struct RandomSample {
  graphgeo::Graph graph;
  int n;
  std::int64_t pnum;
  std::uint64_t seed;
};

inline std::vector<RandomSample> random_matrix(int count, int max_order = 25) {
  std::vector<RandomSample> out;
  for (int i = 0; i < count; ++i) {
    int n = 1 + (i * 7) % max_order;
    std::int64_t pnum = 1 + i % 3;
    auto seed = static_cast<std::uint64_t>(1000 + i);
    out.push_back({gen("erdos_renyi", {n, pnum, 4}, seed), n, pnum, seed});
  }
  return out;
}

}  // namespace support
