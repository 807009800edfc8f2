#include "graphgeo/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <iterator>
#include <numeric>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "graphgeo/geometry.hpp"
#include "graphgeo/morse.hpp"

namespace graphgeo::kernels {

namespace {

// Below this many simplices a layer is expanded serially; thread start-up
// costs more than the work.
constexpr std::size_t kParallelLayerThreshold = 512;
constexpr int kMaxExhaustiveOrder = 12;

bool in_parallel_region() {
#ifdef _OPENMP
  return omp_in_parallel() != 0;
#else
  return true;
#endif
}

// Exceptions must not cross an OpenMP region boundary; the first one thrown
// inside is captured and rethrown by the caller afterwards.
class ExceptionTrap {
 public:
  template <typename F>
  void run(F&& f) noexcept {
    try {
      f();
    } catch (...) {
#pragma omp critical(graphgeo_exception_trap)
      if (!first_) first_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (first_) std::rethrow_exception(first_);
  }

 private:
  std::exception_ptr first_;
};

void extend(const Graph& g, const Simplex& s, std::vector<Simplex>& out) {
  const Vertex last = s.verts.back();
  const auto& nb_last = g.neighbors(last);
  std::vector<Vertex> common(std::upper_bound(nb_last.begin(), nb_last.end(), last), nb_last.end());
  std::vector<Vertex> scratch;
  for (std::size_t i = 0; i + 1 < s.verts.size() && !common.empty(); ++i) {
    const auto& nb = g.neighbors(s.verts[i]);
    scratch.clear();
    std::set_intersection(common.begin(), common.end(), nb.begin(), nb.end(), std::back_inserter(scratch));
    common.swap(scratch);
  }
  for (Vertex w : common) {
    Simplex t{s.verts};
    t.verts.push_back(w);
    out.push_back(std::move(t));
  }
}

struct SphereMasks {
  std::vector<std::uint32_t> mask;
  std::vector<int> sign;
};

std::vector<SphereMasks> sphere_masks(const Graph& g) {
  std::vector<SphereMasks> out(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) {
    auto sphere = unit_sphere(g, v);
    auto c = clique_complex(sphere.graph);
    auto& sm = out[static_cast<std::size_t>(v)];
    for (int k = 0; k <= c.top_dim(); ++k) {
      for (const auto& s : c.layer(k)) {
        std::uint32_t m = 0;
        for (Vertex x : s.verts) m |= std::uint32_t{1} << sphere.map.parent(x);
        sm.mask.push_back(m);
        sm.sign.push_back(k % 2 == 0 ? 1 : -1);
      }
    }
  }
  return out;
}

// Critical points of the ordering in which perm[i] has rank i.
int critical_count(const std::vector<SphereMasks>& spheres, const std::vector<Vertex>& perm) {
  std::uint32_t lower = 0;
  int critical = 0;
  for (Vertex v : perm) {
    const auto& sm = spheres[static_cast<std::size_t>(v)];
    int chi = 0;
    for (std::size_t i = 0; i < sm.mask.size(); ++i)
      if ((sm.mask[i] & ~lower) == 0) chi += sm.sign[i];
    if (chi != 1) ++critical;
    lower |= std::uint32_t{1} << v;
  }
  return critical;
}

void require_exhaustive_order(const Graph& g) {
  if (g.order() > kMaxExhaustiveOrder)
    throw TooLargeError("exhaustive ordering search supports at most " + std::to_string(kMaxExhaustiveOrder) +
                        " vertices, got " + std::to_string(g.order()));
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace serial {

std::vector<Simplex> expand_layer(const Graph& g, std::span<const Simplex> layer) {
  std::vector<Simplex> out;
  for (const auto& s : layer) extend(g, s, out);
  return out;
}

std::vector<std::vector<std::size_t>> local_count_table(const Graph& g) {
  std::vector<std::vector<std::size_t>> out(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) out[static_cast<std::size_t>(v)] = local_counts(g, v);
  return out;
}

std::vector<Rational> curvature_table(const Graph& g) {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(g.order()));
  for (const auto& counts : local_count_table(g)) out.push_back(curvature_from_counts(counts));
  return out;
}

std::vector<std::int64_t> index_table(const Graph& g, std::span<const int> ranks) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) out[static_cast<std::size_t>(v)] = index_from_ranks(g, ranks, v);
  return out;
}

int min_critical_points(const Graph& g) {
  require_exhaustive_order(g);
  if (g.empty()) return 0;
  auto spheres = sphere_masks(g);
  std::vector<Vertex> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  int best = g.order() + 1;
  do {
    best = std::min(best, critical_count(spheres, perm));
    // the global minimum is always critical, so 1 cannot be beaten
    if (best == 1) break;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace serial

namespace parallel {

std::vector<Simplex> expand_layer(const Graph& g, std::span<const Simplex> layer) {
  if (layer.size() < kParallelLayerThreshold || in_parallel_region()) return serial::expand_layer(g, layer);

  std::vector<std::vector<Simplex>> blocks;
  ExceptionTrap trap;
#pragma omp parallel
  {
#ifdef _OPENMP
    const auto nthreads = static_cast<std::size_t>(omp_get_num_threads());
    const auto tid = static_cast<std::size_t>(omp_get_thread_num());
#else
    const std::size_t nthreads = 1;
    const std::size_t tid = 0;
#endif
#pragma omp single
    blocks.resize(nthreads);
    // contiguous blocks in thread order keep the output lexicographic
    const std::size_t begin = layer.size() * tid / nthreads;
    const std::size_t end = layer.size() * (tid + 1) / nthreads;
    trap.run([&] {
      for (std::size_t i = begin; i < end; ++i) extend(g, layer[i], blocks[tid]);
    });
  }
  trap.rethrow();

  std::size_t total = 0;
  for (const auto& b : blocks) total += b.size();
  std::vector<Simplex> out;
  out.reserve(total);
  for (auto& b : blocks) std::move(b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<std::vector<std::size_t>> local_count_table(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<std::size_t>> out(static_cast<std::size_t>(n));
  ExceptionTrap trap;
#pragma omp parallel for schedule(dynamic)
  for (int v = 0; v < n; ++v) trap.run([&] { out[static_cast<std::size_t>(v)] = local_counts(g, v); });
  trap.rethrow();
  return out;
}

std::vector<Rational> curvature_table(const Graph& g) {
  auto counts = local_count_table(g);
  std::vector<Rational> out(counts.size());
  for (std::size_t v = 0; v < counts.size(); ++v) out[v] = curvature_from_counts(counts[v]);
  return out;
}

std::vector<std::int64_t> index_table(const Graph& g, std::span<const int> ranks) {
  if (ranks.size() != static_cast<std::size_t>(g.order())) throw InputError("rank vector does not match graph order");
  const int n = g.order();
  std::vector<std::int64_t> out(static_cast<std::size_t>(n));
  ExceptionTrap trap;
#pragma omp parallel for schedule(dynamic)
  for (int v = 0; v < n; ++v) trap.run([&] { out[static_cast<std::size_t>(v)] = index_from_ranks(g, ranks, v); });
  trap.rethrow();
  return out;
}

int min_critical_points(const Graph& g) {
  require_exhaustive_order(g);
  if (g.empty()) return 0;
  const auto spheres = sphere_masks(g);
  const int n = g.order();
  int best = n + 1;
  std::atomic<bool> floor_reached{false};

  // one task per choice of the lowest vertex
#pragma omp parallel for schedule(dynamic) reduction(min : best)
  for (int first = 0; first < n; ++first) {
    std::vector<Vertex> perm;
    perm.reserve(static_cast<std::size_t>(n));
    perm.push_back(first);
    for (Vertex v = 0; v < n; ++v)
      if (v != first) perm.push_back(v);
    do {
      if (floor_reached.load(std::memory_order_relaxed)) break;
      int c = critical_count(spheres, perm);
      if (c < best) best = c;
      if (c == 1) floor_reached.store(true, std::memory_order_relaxed);
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
  }
  return best;
}

}  // namespace parallel

}  // namespace graphgeo::kernels
