#include "graphgeo/simplicial.hpp"

#include <algorithm>
#include <string>

#include "graphgeo/kernels.hpp"
#include "graphgeo/morse.hpp"

namespace graphgeo {

Simplex Simplex::face(std::size_t i) const {
  Simplex f;
  f.verts.reserve(verts.size() - 1);
  for (std::size_t j = 0; j < verts.size(); ++j)
    if (j != i) f.verts.push_back(verts[j]);
  return f;
}

OrientedSimplex canonicalize(std::span<const Vertex> tuple) {
  OrientedSimplex out;
  out.simplex.verts.assign(tuple.begin(), tuple.end());
  auto& v = out.simplex.verts;
  // insertion sort, counting transpositions
  int swaps = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    for (std::size_t j = i; j > 0 && v[j - 1] > v[j]; --j) {
      std::swap(v[j - 1], v[j]);
      ++swaps;
    }
  out.sign = (swaps % 2 == 0) ? 1 : -1;
  if (std::adjacent_find(v.begin(), v.end()) != v.end()) out.sign = 0;
  return out;
}

std::vector<std::size_t> CliqueComplex::fvec() const {
  std::vector<std::size_t> f;
  f.reserve(layers.size());
  for (const auto& l : layers) f.push_back(l.size());
  return f;
}

std::span<const Simplex> CliqueComplex::layer(int k) const {
  if (k < 0 || k > top_dim()) return {};
  return layers[static_cast<std::size_t>(k)];
}

std::optional<std::size_t> CliqueComplex::find(const Simplex& s) const {
  auto l = layer(s.dim());
  auto it = std::lower_bound(l.begin(), l.end(), s);
  if (it == l.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - l.begin());
}

std::size_t CliqueComplex::total_simplices() const {
  std::size_t total = 0;
  for (const auto& l : layers) total += l.size();
  return total;
}

CliqueComplex clique_complex(const Graph& g, std::optional<int> max_dim) {
  CliqueComplex c;
  if (g.empty()) return c;
  if (max_dim && *max_dim < 0) {
    c.truncated = true;
    return c;
  }
  std::vector<Simplex> current;
  current.reserve(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) current.push_back(Simplex{{v}});
  while (!current.empty()) {
    if (max_dim && static_cast<int>(c.layers.size()) > *max_dim) {
      c.truncated = true;
      break;
    }
    auto next = kernels::parallel::expand_layer(g, current);
    c.layers.push_back(std::move(current));
    current = std::move(next);
  }
  return c;
}

std::int64_t euler_characteristic(const CliqueComplex& c) {
  if (c.truncated) throw InputError("Euler characteristic of a truncated clique complex is undefined");
  std::int64_t chi = 0;
  for (std::size_t k = 0; k < c.layers.size(); ++k) {
    auto n = static_cast<std::int64_t>(c.layers[k].size());
    chi += (k % 2 == 0) ? n : -n;
  }
  return chi;
}

std::vector<std::size_t> local_counts(const Graph& g, Vertex v) {
  return clique_complex(unit_sphere(g, v).graph).fvec();
}

bool IdentityReport::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const IdentityRow& r) { return r.holds(); });
}

IdentityReport check_transfer(const Graph& g, const CliqueComplex& c) {
  if (c.truncated) throw InputError("transfer equations need the full clique complex");
  auto table = kernels::parallel::local_count_table(g);
  std::size_t levels = c.layers.size();
  for (const auto& t : table) levels = std::max(levels, t.size() + 1);

  IdentityReport report{"transfer", {}};
  for (std::size_t k = 1; k < levels; ++k) {
    std::int64_t lhs = 0;
    for (const auto& t : table)
      if (k - 1 < t.size()) lhs += static_cast<std::int64_t>(t[k - 1]);
    auto vk = static_cast<std::int64_t>(c.layer(static_cast<int>(k)).size());
    report.rows.push_back({static_cast<int>(k), lhs, static_cast<std::int64_t>(k + 1) * vk});
  }
  return report;
}

IdentityReport check_intermediate(const Graph& g, const CliqueComplex& c, const VertexFunction& f) {
  if (c.truncated) throw InputError("intermediate equations need the full clique complex");
  if (f.size() != static_cast<std::size_t>(g.order()))
    throw InputError("vertex function does not match the graph order");

  std::vector<std::int64_t> sums;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto w = mixed_counts(g, f, v);
    if (w.size() > sums.size()) sums.resize(w.size(), 0);
    for (std::size_t k = 0; k < w.size(); ++k) sums[k] += static_cast<std::int64_t>(w[k]);
  }
  std::size_t levels = std::max(sums.size(), c.layers.size());

  IdentityReport report{"intermediate", {}};
  for (std::size_t k = 1; k < levels; ++k) {
    std::int64_t lhs = k < sums.size() ? sums[k] : 0;
    auto next = static_cast<std::int64_t>(c.layer(static_cast<int>(k + 1)).size());
    report.rows.push_back({static_cast<int>(k), lhs, static_cast<std::int64_t>(k) * next});
  }
  return report;
}

}  // namespace graphgeo
