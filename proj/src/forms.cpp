#include "graphgeo/forms.hpp"

#include <algorithm>
#include <deque>
#include <exception>
#include <set>
#include <string>

#include "graphgeo/random.hpp"

namespace graphgeo {

namespace {

std::string describe(const Simplex& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.verts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.verts[i]);
  }
  return out + ")";
}

std::size_t require_index(const CliqueComplex& c, const Simplex& s) {
  auto idx = c.find(s);
  if (!idx) throw InputError("simplex " + describe(s) + " is not a clique of the complex");
  return *idx;
}

void require_form_shape(const CliqueComplex& c, const Form& f) {
  if (f.level < 0 || f.values.size() != c.layer(f.level).size())
    throw InputError("form of level " + std::to_string(f.level) + " does not match the complex");
}

int face_sign(std::size_t i) { return i % 2 == 0 ? 1 : -1; }

}  // namespace

Form zero_form(const CliqueComplex& c, int level) {
  if (level < 0) throw InputError("negative form level");
  return Form{level, std::vector<Rational>(c.layer(level).size())};
}

Rational evaluate(const CliqueComplex& c, const Form& f, std::span<const Vertex> tuple) {
  require_form_shape(c, f);
  if (tuple.size() != static_cast<std::size_t>(f.level) + 1)
    throw InputError("form of level " + std::to_string(f.level) + " evaluated on " + std::to_string(tuple.size()) +
                     " vertices");
  auto [simplex, sign] = canonicalize(tuple);
  if (sign == 0) return Rational(0);
  return Rational(sign) * f.values[require_index(c, simplex)];
}

void Chain::add(std::span<const Vertex> tuple, std::int64_t coeff) {
  if (tuple.size() != static_cast<std::size_t>(level) + 1) throw InputError("chain term has the wrong level");
  auto [simplex, sign] = canonicalize(tuple);
  if (sign == 0) throw InputError("chain term repeats a vertex");
  auto& slot = coeffs[simplex];
  slot += sign * coeff;
  if (slot == 0) coeffs.erase(simplex);
}

Form exterior_derivative(const CliqueComplex& c, const Form& f) {
  require_form_shape(c, f);
  auto upper = c.layer(f.level + 1);
  Form df{f.level + 1, std::vector<Rational>(upper.size())};
  for (std::size_t j = 0; j < upper.size(); ++j) {
    Rational sum;
    for (std::size_t i = 0; i < upper[j].verts.size(); ++i) {
      const Rational& v = f.values[require_index(c, upper[j].face(i))];
      if (face_sign(i) > 0)
        sum += v;
      else
        sum -= v;
    }
    df.values[j] = sum;
  }
  return df;
}

Chain boundary(const CliqueComplex& c, const Chain& ch) {
  if (ch.level < 1) throw InputError("boundary needs a chain of level at least 1");
  Chain out{ch.level - 1, {}};
  for (const auto& [s, a] : ch.coeffs) {
    if (s.dim() != ch.level) throw InputError("chain term " + describe(s) + " has the wrong level");
    require_index(c, s);
    for (std::size_t i = 0; i < s.verts.size(); ++i) {
      Simplex f = s.face(i);
      auto& slot = out.coeffs[f];
      slot += face_sign(i) * a;
      if (slot == 0) out.coeffs.erase(f);
    }
  }
  return out;
}

Rational pairing(const CliqueComplex& c, const Form& f, const Chain& ch) {
  require_form_shape(c, f);
  if (f.level != ch.level)
    throw InputError("pairing a " + std::to_string(f.level) + "-form with a " + std::to_string(ch.level) + "-chain");
  Rational sum;
  for (const auto& [s, a] : ch.coeffs) sum += Rational(a) * f.values[require_index(c, s)];
  return sum;
}

Rational integral(const Form& f) {
  Rational sum;
  for (const auto& v : f.values) sum += v;
  return sum;
}

OrientationResult orientation_search(const CliqueComplex& c, int k) {
  if (c.truncated) throw InputError("orientation needs the full clique complex");
  if (k < 1) throw InputError("orientation level must be at least 1");
  if (c.top_dim() != k)
    throw GeometryError("not an orientable geometric structure: the complex has top dimension " +
                        std::to_string(c.top_dim()) + ", not " + std::to_string(k));

  // pure: every j-simplex (j < k) lies in some (j+1)-simplex
  for (int j = 0; j < k; ++j) {
    std::vector<char> covered(c.layer(j).size(), 0);
    for (const auto& s : c.layer(j + 1))
      for (std::size_t i = 0; i < s.verts.size(); ++i) covered[*c.find(s.face(i))] = 1;
    auto it = std::find(covered.begin(), covered.end(), 0);
    if (it != covered.end())
      throw GeometryError("not an orientable geometric structure: maximal simplex " +
                          describe(c.layer(j)[static_cast<std::size_t>(it - covered.begin())]) + " has dimension " +
                          std::to_string(j));
  }

  auto top = c.layer(k);
  struct Incidence {
    std::size_t simplex;
    int sign;
  };
  std::vector<std::vector<Incidence>> incident(c.layer(k - 1).size());
  for (std::size_t s = 0; s < top.size(); ++s)
    for (std::size_t i = 0; i < top[s].verts.size(); ++i)
      incident[*c.find(top[s].face(i))].push_back({s, face_sign(i)});

  // neighbor b of a must carry sign -sign(a) * eps_a * eps_b
  struct Link {
    std::size_t other;
    int factor;
  };
  std::vector<std::vector<Link>> links(top.size());
  for (std::size_t f = 0; f < incident.size(); ++f) {
    const auto& inc = incident[f];
    if (inc.size() > 2)
      throw GeometryError("not an orientable geometric structure: face " + describe(c.layer(k - 1)[f]) + " lies in " +
                          std::to_string(inc.size()) + " maximal simplices");
    if (inc.size() == 2) {
      int factor = -inc[0].sign * inc[1].sign;
      links[inc[0].simplex].push_back({inc[1].simplex, factor});
      links[inc[1].simplex].push_back({inc[0].simplex, factor});
    }
  }

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  Orientation o{k, std::vector<int>(top.size(), 0)};
  std::vector<std::size_t> parent(top.size(), kNone);
  std::deque<std::size_t> queue;
  for (std::size_t root = 0; root < top.size(); ++root) {
    if (o.signs[root] != 0) continue;
    o.signs[root] = 1;
    queue.push_back(root);
    while (!queue.empty()) {
      std::size_t a = queue.front();
      queue.pop_front();
      for (auto [b, factor] : links[a]) {
        int want = factor * o.signs[a];
        if (o.signs[b] == 0) {
          o.signs[b] = want;
          parent[b] = a;
          queue.push_back(b);
        } else if (o.signs[b] != want) {
          // tree paths from a and b meet at their lowest common ancestor
          std::vector<std::size_t> path_a{a};
          std::vector<std::size_t> path_b{b};
          while (parent[path_a.back()] != kNone) path_a.push_back(parent[path_a.back()]);
          while (parent[path_b.back()] != kNone) path_b.push_back(parent[path_b.back()]);
          while (path_a.size() > 1 && path_b.size() > 1 && path_a[path_a.size() - 2] == path_b[path_b.size() - 2]) {
            path_a.pop_back();
            path_b.pop_back();
          }
          NotOrientable witness;
          for (std::size_t s : path_a) witness.witness.push_back(top[s]);
          for (std::size_t i = path_b.size() - 1; i-- > 0;) witness.witness.push_back(top[path_b[i]]);
          std::reverse(witness.witness.begin(), witness.witness.end());
          return witness;
        }
      }
    }
  }
  return o;
}

Chain volume_chain(const CliqueComplex& c, const Orientation& o) {
  auto top = c.layer(o.level);
  if (o.signs.size() != top.size()) throw InputError("orientation does not match the complex");
  Chain ch{o.level, {}};
  for (std::size_t s = 0; s < top.size(); ++s)
    if (o.signs[s] != 0) ch.coeffs.emplace(top[s], o.signs[s]);
  return ch;
}

StokesReport stokes_verify(const CliqueComplex& c, const Orientation& o, const Form& f) {
  if (f.level != o.level - 1)
    throw InputError("Stokes needs a " + std::to_string(o.level - 1) + "-form, got level " + std::to_string(f.level));
  Chain volume = volume_chain(c, o);
  StokesReport r;
  r.lhs = pairing(c, exterior_derivative(c, f), volume);
  r.boundary = boundary(c, volume);
  r.rhs = pairing(c, f, r.boundary);
  return r;
}

BoundaryGraphResult boundary_as_graph(const CliqueComplex& c, const Chain& ch) {
  std::set<Vertex> verts;
  for (const auto& [s, a] : ch.coeffs) {
    require_index(c, s);
    if (a != 1 && a != -1) return NotAGraph{s, a};
    verts.insert(s.verts.begin(), s.verts.end());
  }
  VertexMap map{std::vector<Vertex>(verts.begin(), verts.end())};
  auto local = [&](Vertex v) {
    return static_cast<Vertex>(std::lower_bound(map.forward.begin(), map.forward.end(), v) - map.forward.begin());
  };
  std::set<Edge> edges;
  for (const auto& [s, a] : ch.coeffs)
    for (std::size_t i = 0; i < s.verts.size(); ++i)
      for (std::size_t j = i + 1; j < s.verts.size(); ++j) edges.emplace(local(s.verts[i]), local(s.verts[j]));
  std::vector<Edge> edge_list(edges.begin(), edges.end());
  Graph graph(static_cast<int>(map.size()), edge_list);
  return Subgraph{std::move(graph), std::move(map)};
}

IntMatrix coboundary_matrix(const CliqueComplex& c, int k) {
  auto lower = c.layer(k);
  auto upper = c.layer(k + 1);
  IntMatrix m(upper.size(), lower.size());
  for (std::size_t j = 0; j < upper.size(); ++j)
    for (std::size_t i = 0; i < upper[j].verts.size(); ++i) m(j, *c.find(upper[j].face(i))) = face_sign(i);
  return m;
}

std::vector<std::int64_t> betti_numbers(const CliqueComplex& c) {
  if (c.truncated) throw InputError("Betti numbers need the full clique complex");
  const int levels = static_cast<int>(c.layers.size());
  // rank[k] = rank of d: level k -> k+1
  std::vector<std::int64_t> rank(static_cast<std::size_t>(levels), 0);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < levels - 1; ++k) {
    try {
      rank[static_cast<std::size_t>(k)] = static_cast<std::int64_t>(exact_rank(coboundary_matrix(c, k)));
    } catch (...) {
#pragma omp critical(graphgeo_betti_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<std::int64_t> b(static_cast<std::size_t>(levels));
  for (int k = 0; k < levels; ++k) {
    auto uk = static_cast<std::size_t>(k);
    b[uk] = static_cast<std::int64_t>(c.layers[uk].size()) - rank[uk] - (k > 0 ? rank[uk - 1] : 0);
  }
  return b;
}

EulerPoincareReport euler_poincare_verify(const CliqueComplex& c) {
  EulerPoincareReport r;
  r.betti = betti_numbers(c);
  for (std::size_t k = 0; k < r.betti.size(); ++k) r.cohomological += (k % 2 == 0) ? r.betti[k] : -r.betti[k];
  r.combinatorial = euler_characteristic(c);
  return r;
}

Form random_form(const CliqueComplex& c, int level, std::uint64_t seed) {
  Form f = zero_form(c, level);
  Rng rng(seed);
  for (auto& v : f.values) v = Rational(rng.uniform(-9, 9));
  return f;
}

Chain random_chain(const CliqueComplex& c, int level, std::uint64_t seed) {
  if (level < 0) throw InputError("negative chain level");
  Chain ch{level, {}};
  Rng rng(seed);
  for (const auto& s : c.layer(level)) {
    std::int64_t a = rng.uniform(-9, 9);
    if (a != 0) ch.coeffs.emplace(s, a);
  }
  return ch;
}

}  // namespace graphgeo
