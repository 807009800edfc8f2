#include "graphgeo/generators.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <string>

#include "graphgeo/random.hpp"

namespace graphgeo {

namespace {

constexpr std::int64_t kMaxOrder = 1'000'000;

using Params = std::vector<std::int64_t>;

void require(bool ok, const std::string& family, const std::string& what) {
  if (!ok) throw InputError(family + ": " + what);
}

int order_param(std::int64_t n, std::int64_t min, const std::string& family) {
  require(n >= min && n <= kMaxOrder, family, "parameter must lie in [" + std::to_string(min) + ", " +
                                                  std::to_string(kMaxOrder) + "], got " + std::to_string(n));
  return static_cast<int>(n);
}

Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph complete_bipartite(int m, int n) {
  std::vector<Edge> e;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) e.emplace_back(i, m + j);
  return Graph(m + n, e);
}

// center 0, leaves 1..n
Graph star(int n) {
  std::vector<Edge> e;
  for (int i = 1; i <= n; ++i) e.emplace_back(0, i);
  return Graph(n + 1, e);
}

// center 0, rim 1..n
Graph wheel(int n) {
  std::vector<Edge> e;
  for (int i = 1; i <= n; ++i) {
    e.emplace_back(0, i);
    e.emplace_back(i, i % n + 1);
  }
  return Graph(n + 1, e);
}

Graph grid(int rows, int cols) {
  std::vector<Edge> e;
  auto id = [&](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) e.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) e.emplace_back(id(r, c), id(r + 1, c));
    }
  return Graph(rows * cols, e);
}

// outer u_i = i, inner v_i = n + i
Graph petersen(int n, int k) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    e.emplace_back(i, (i + 1) % n);
    e.emplace_back(i, n + i);
    e.emplace_back(n + i, n + (i + k) % n);
  }
  return Graph(2 * n, e);
}

Graph tree_random(int n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.emplace_back(static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(i))), i);
  return Graph(n, e);
}

Graph erdos_renyi(int n, std::uint64_t num, std::uint64_t den, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.bernoulli(num, den)) e.emplace_back(i, j);
  return Graph(n, e);
}

// complement of the perfect matching {0,1},{2,3},{4,5}
Graph octahedron() {
  std::vector<Edge> e;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (j != (i ^ 1)) e.emplace_back(i, j);
  return Graph(6, e);
}

// apex 0, upper ring 1..5, lower ring 6..10 rotated half a step, apex 11
Graph icosahedron() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    int up = 1 + i;
    int up_next = 1 + (i + 1) % 5;
    int lo = 6 + i;
    int lo_next = 6 + (i + 1) % 5;
    e.emplace_back(0, up);
    e.emplace_back(up, up_next);
    e.emplace_back(up, lo);
    e.emplace_back(up_next, lo);
    e.emplace_back(lo, lo_next);
    e.emplace_back(lo, 11);
  }
  return Graph(12, e);
}

// every cube corner c (3 bits) becomes a triangle of vertices 3c+b, one per
// cube edge leaving c in direction b
Graph truncated_cube() {
  std::vector<Edge> e;
  for (int c = 0; c < 8; ++c)
    for (int b = 0; b < 3; ++b) {
      for (int b2 = b + 1; b2 < 3; ++b2) e.emplace_back(3 * c + b, 3 * c + b2);
      int d = c ^ (1 << b);
      if (c < d) e.emplace_back(3 * c + b, 3 * d + b);
    }
  return Graph(24, e);
}

// Unit-edge adjacency of the snub cube: 5-regular, 60 edges, 32 triangles.
// The six square faces are the holes.
Graph snub_cube() {
  static constexpr std::array<Edge, 60> kEdges{{
      {0, 1},   {0, 2},   {0, 6},   {0, 12},  {0, 13},  {1, 2},   {1, 4},   {1, 5},   {1, 13},  {2, 5},
      {2, 6},   {2, 8},   {3, 4},   {3, 5},   {3, 9},   {3, 11},  {3, 15},  {4, 5},   {4, 15},  {4, 16},
      {5, 11},  {6, 7},   {6, 8},   {6, 18},  {7, 8},   {7, 10},  {7, 18},  {7, 19},  {8, 10},  {8, 11},
      {9, 10},  {9, 11},  {9, 21},  {9, 22},  {10, 11}, {10, 22}, {12, 13}, {12, 14}, {12, 18}, {12, 20},
      {13, 14}, {13, 16}, {14, 16}, {14, 17}, {14, 20}, {15, 16}, {15, 17}, {15, 21}, {16, 17}, {17, 21},
      {17, 23}, {18, 19}, {18, 20}, {19, 20}, {19, 22}, {19, 23}, {20, 23}, {21, 22}, {21, 23}, {22, 23},
  }};
  return Graph(24, kEdges);
}

// triangulated prism: a_i = i, b_i = n + i
Graph cylinder(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    int next = (i + 1) % n;
    e.emplace_back(i, next);
    e.emplace_back(n + i, n + next);
    e.emplace_back(i, n + i);
    e.emplace_back(i, n + next);
  }
  return Graph(2 * n, e);
}

// square of the odd cycle C_{2m+1}
Graph moebius(int m) {
  const int n = 2 * m + 1;
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    e.emplace_back(i, (i + 1) % n);
    e.emplace_back(i, (i + 2) % n);
  }
  return Graph(n, e);
}

struct Family {
  GeneratorInfo info;
  std::function<Graph(const Params&, std::uint64_t)> build;
};

const std::vector<Family>& families() {
  static const std::vector<Family> kFamilies = [] {
    std::vector<Family> f;
    f.push_back({{"path", {"n"}, false, "path on n vertices", {5}},
                 [](const Params& p, std::uint64_t) { return path(order_param(p[0], 1, "path")); }});
    f.push_back({{"cycle", {"n"}, false, "cycle C_n", {7}},
                 [](const Params& p, std::uint64_t) { return cycle(order_param(p[0], 3, "cycle")); }});
    f.push_back({{"complete", {"n"}, false, "complete graph K_n", {4}},
                 [](const Params& p, std::uint64_t) { return complete(order_param(p[0], 0, "complete")); }});
    f.push_back({{"complete_bipartite", {"m", "n"}, false, "complete bipartite graph K_{m,n}", {3, 4}},
                 [](const Params& p, std::uint64_t) {
                   return complete_bipartite(order_param(p[0], 1, "complete_bipartite"),
                                             order_param(p[1], 1, "complete_bipartite"));
                 }});
    f.push_back({{"star", {"n"}, false, "star with n leaves (center 0)", {8}},
                 [](const Params& p, std::uint64_t) { return star(order_param(p[0], 1, "star")); }});
    f.push_back({{"wheel", {"n"}, false, "wheel with n rim vertices (center 0)", {4}},
                 [](const Params& p, std::uint64_t) { return wheel(order_param(p[0], 4, "wheel")); }});
    f.push_back({{"grid", {"m", "n"}, false, "m x n lattice", {3, 4}}, [](const Params& p, std::uint64_t) {
                   return grid(order_param(p[0], 1, "grid"), order_param(p[1], 1, "grid"));
                 }});
    f.push_back({{"petersen", {"n", "k"}, false, "generalized Petersen graph, 1 <= k < n/2", {5, 2}},
                 [](const Params& p, std::uint64_t) {
                   int n = order_param(p[0], 3, "petersen");
                   require(p[1] >= 1 && 2 * p[1] < n, "petersen", "k must satisfy 1 <= k < n/2");
                   return petersen(n, static_cast<int>(p[1]));
                 }});
    f.push_back({{"tree_random", {"n"}, true, "random recursive tree", {12}},
                 [](const Params& p, std::uint64_t seed) {
                   return tree_random(order_param(p[0], 1, "tree_random"), seed);
                 }});
    f.push_back({{"erdos_renyi",
                  {"n", "p_numerator", "p_denominator"},
                  true,
                  "G(n,p) with p = p_numerator/p_denominator",
                  {12, 1, 2}},
                 [](const Params& p, std::uint64_t seed) {
                   int n = order_param(p[0], 0, "erdos_renyi");
                   require(p[2] >= 1 && p[1] >= 0 && p[1] <= p[2], "erdos_renyi",
                           "probability must satisfy 0 <= p_numerator <= p_denominator, p_denominator >= 1");
                   return erdos_renyi(n, static_cast<std::uint64_t>(p[1]), static_cast<std::uint64_t>(p[2]), seed);
                 }});
    f.push_back({{"octahedron", {}, false, "octahedron", {}},
                 [](const Params&, std::uint64_t) { return octahedron(); }});
    f.push_back({{"icosahedron", {}, false, "icosahedron", {}},
                 [](const Params&, std::uint64_t) { return icosahedron(); }});
    f.push_back({{"tetrahedron", {}, false, "tetrahedron K_4", {}},
                 [](const Params&, std::uint64_t) { return complete(4); }});
    f.push_back({{"truncated_cube", {}, false, "truncated cube", {}},
                 [](const Params&, std::uint64_t) { return truncated_cube(); }});
    f.push_back({{"snub_cube", {}, false, "snub cube edge graph (square faces open)", {}},
                 [](const Params&, std::uint64_t) { return snub_cube(); }});
    f.push_back({{"cylinder", {"n"}, false, "triangulated cylinder on 2n vertices", {6}},
                 [](const Params& p, std::uint64_t) { return cylinder(order_param(p[0], 4, "cylinder")); }});
    f.push_back({{"moebius", {"m"}, false, "Moebius band: square of the cycle C_{2m+1}", {3}},
                 [](const Params& p, std::uint64_t) { return moebius(order_param(p[0], 3, "moebius")); }});
    return f;
  }();
  return kFamilies;
}

}  // namespace

const std::vector<GeneratorInfo>& generator_registry() {
  static const std::vector<GeneratorInfo> kInfo = [] {
    std::vector<GeneratorInfo> out;
    for (const auto& f : families()) out.push_back(f.info);
    return out;
  }();
  return kInfo;
}

Graph generate(const GeneratorSpec& spec) {
  const auto& all = families();
  auto it = std::find_if(all.begin(), all.end(), [&](const Family& f) { return f.info.name == spec.name; });
  if (it == all.end()) throw InputError("unknown graph family '" + spec.name + "'");
  if (spec.params.size() != it->info.param_names.size())
    throw InputError(spec.name + " takes " + std::to_string(it->info.param_names.size()) + " parameter(s), got " +
                     std::to_string(spec.params.size()));
  if (spec.seed && !it->info.random) throw InputError(spec.name + " is not a random family; --seed does not apply");
  return it->build(spec.params, spec.seed.value_or(0));
}

}  // namespace graphgeo
