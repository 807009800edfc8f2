#pragma once

// Data-parallel inner loops. Every kernel has a plain serial version, kept as
// the reference the OpenMP version is tested and benchmarked against. Both
// variants return identical results in identical order.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "graphgeo/graph.hpp"
#include "graphgeo/rational.hpp"
#include "graphgeo/simplicial.hpp"

namespace graphgeo::kernels {

namespace serial {

/// Cliques one level up: every simplex extended by each common neighbor larger
/// than its last vertex. Input in lexicographic order gives output in
/// lexicographic order.
std::vector<Simplex> expand_layer(const Graph& g, std::span<const Simplex> layer);

/// Per-vertex f-vectors of the unit spheres.
std::vector<std::vector<std::size_t>> local_count_table(const Graph& g);

/// Per-vertex curvature.
std::vector<Rational> curvature_table(const Graph& g);

/// Per-vertex Poincare-Hopf index for the vertex ordering given by ranks.
std::vector<std::int64_t> index_table(const Graph& g, std::span<const int> ranks);

/// Smallest number of critical points over all n! vertex orderings.
/// Requires order() <= 12.
int min_critical_points(const Graph& g);

}  // namespace serial

namespace parallel {

std::vector<Simplex> expand_layer(const Graph& g, std::span<const Simplex> layer);
std::vector<std::vector<std::size_t>> local_count_table(const Graph& g);
std::vector<Rational> curvature_table(const Graph& g);
std::vector<std::int64_t> index_table(const Graph& g, std::span<const int> ranks);
int min_critical_points(const Graph& g);

}  // namespace parallel

/// Number of OpenMP threads available (1 when built without OpenMP).
int max_threads();

}  // namespace graphgeo::kernels
