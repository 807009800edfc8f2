#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "graphgeo/exact_rank.hpp"
#include "graphgeo/graph.hpp"
#include "graphgeo/rational.hpp"
#include "graphgeo/simplicial.hpp"

namespace graphgeo {

/// k-form: one rational value per k-simplex of a clique complex, stored in
/// layer order. Values refer to the ascending vertex order of each simplex.
struct Form {
  int level = 0;
  std::vector<Rational> values;

  friend bool operator==(const Form&, const Form&) = default;
};

/// Zero k-form on c.
Form zero_form(const CliqueComplex& c, int level);

/// Value of f on an arbitrary ordering of a simplex's vertices: the
/// canonical value times the sign of the permutation.
Rational evaluate(const CliqueComplex& c, const Form& f, std::span<const Vertex> tuple);

/// Integer k-chain. Zero coefficients are never stored.
struct Chain {
  int level = 0;
  std::map<Simplex, std::int64_t> coeffs;

  /// Adds `coeff` times the simplex given by an arbitrary vertex ordering.
  void add(std::span<const Vertex> tuple, std::int64_t coeff);

  friend bool operator==(const Chain&, const Chain&) = default;
};

/// df on every (k+1)-simplex: alternating sum of f over its faces.
Form exterior_derivative(const CliqueComplex& c, const Form& f);

/// Alternating face sum, extended linearly. Requires level >= 1.
Chain boundary(const CliqueComplex& c, const Chain& ch);

/// <f, ch> = sum of a_s f(s).
Rational pairing(const CliqueComplex& c, const Form& f, const Chain& ch);

/// Sum of f over all simplices of its level.
Rational integral(const Form& f);

/// Signs on the k-simplices of a pure k-dimensional complex, in layer order,
/// such that the induced boundary signs cancel on every shared face.
struct Orientation {
  int level = 0;
  std::vector<int> signs;
};

/// Closed cycle of k-simplices, consecutive ones sharing a (k-1)-face, along
/// which the cancellation constraints multiply to -1.
struct NotOrientable {
  std::vector<Simplex> witness;
};

using OrientationResult = std::variant<Orientation, NotOrientable>;

/// The complex is not a pure k-dimensional complex whose (k-1)-faces each
/// lie in at most two k-simplices.
class GeometryError : public InputError {
 public:
  using InputError::InputError;
};

/// Sign propagation over the face-adjacency graph of the k-simplices.
OrientationResult orientation_search(const CliqueComplex& c, int k);

/// Chain with coefficient signs[s] on every k-simplex.
Chain volume_chain(const CliqueComplex& c, const Orientation& o);

struct StokesReport {
  Rational lhs;  // <df, volume chain>
  Rational rhs;  // <f, boundary of the volume chain>
  Chain boundary;

  [[nodiscard]] bool passed() const { return lhs == rhs; }
};

/// Integrates df over the oriented complex and f over its boundary chain.
/// f must be a (k-1)-form for an orientation at level k.
StokesReport stokes_verify(const CliqueComplex& c, const Orientation& o, const Form& f);

struct NotAGraph {
  Simplex simplex;
  std::int64_t coefficient = 0;
};

using BoundaryGraphResult = std::variant<Subgraph, NotAGraph>;

/// If every coefficient of ch is +-1, the graph spanned by its support
/// simplices (vertex ids mapped back to the parent graph).
BoundaryGraphResult boundary_as_graph(const CliqueComplex& c, const Chain& ch);

/// Matrix of d from level k to k+1; rows are (k+1)-simplices, columns are
/// k-simplices, both in layer order.
IntMatrix coboundary_matrix(const CliqueComplex& c, int k);

/// b_k = v_k - rank D_k - rank D_{k-1}, exact.
std::vector<std::int64_t> betti_numbers(const CliqueComplex& c);

struct EulerPoincareReport {
  std::vector<std::int64_t> betti;
  std::int64_t cohomological = 0;
  std::int64_t combinatorial = 0;

  [[nodiscard]] bool passed() const { return cohomological == combinatorial; }
};

EulerPoincareReport euler_poincare_verify(const CliqueComplex& c);

/// Integer coefficients drawn uniformly from [-9, 9].
Form random_form(const CliqueComplex& c, int level, std::uint64_t seed);
Chain random_chain(const CliqueComplex& c, int level, std::uint64_t seed);

}  // namespace graphgeo
