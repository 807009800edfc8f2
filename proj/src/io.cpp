#include "graphgeo/io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string_view>
#include <vector>

namespace graphgeo::io {

namespace {

struct LineReader {
  std::istream& in;
  std::size_t number = 0;

  // Next non-blank, non-comment line split into tokens.
  std::optional<std::vector<std::string>> next() {
    std::string line;
    while (std::getline(in, line)) {
      ++number;
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      std::istringstream ss(line);
      std::vector<std::string> tokens;
      for (std::string t; ss >> t;) tokens.push_back(t);
      return tokens;
    }
    return std::nullopt;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("line " + std::to_string(number) + ": " + what);
  }

  std::int64_t integer(const std::string& token) const {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size()) fail("expected an integer, got '" + token + "'");
    return v;
  }

  Rational rational(const std::string& token) const {
    try {
      return Rational::parse(token);
    } catch (const std::exception&) {
      fail("expected an integer or p/q, got '" + token + "'");
    }
  }
};

}  // namespace

Graph read_graph(std::istream& in) {
  LineReader r{in};
  auto header = r.next();
  if (!header) throw InputError("empty graph file: missing 'p <n>' line");
  if (header->size() != 2 || (*header)[0] != "p") r.fail("expected 'p <n>' as the first line");
  std::int64_t n = r.integer((*header)[1]);
  if (n < 0 || n > INT32_MAX) r.fail("vertex count out of range");

  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (auto tokens = r.next()) {
    if ((*tokens)[0] == "p") r.fail("'p' line may appear only once");
    if ((*tokens)[0] != "e" || tokens->size() != 3) r.fail("expected 'e <u> <v>'");
    std::int64_t u = r.integer((*tokens)[1]);
    std::int64_t v = r.integer((*tokens)[2]);
    if (u < 0 || v < 0 || u >= n || v >= n) r.fail("edge endpoint out of range [0, " + std::to_string(n) + ")");
    if (u == v) r.fail("self-loop at vertex " + std::to_string(u));
    Edge e{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
    if (!seen.insert(e).second) r.fail("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    edges.push_back(e);
  }
  return Graph(static_cast<int>(n), edges);
}

void write_graph(std::ostream& out, const Graph& g, const std::string& comment) {
  if (!comment.empty()) out << "# " << comment << '\n';
  out << "p " << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
}

VertexFunction read_vertex_function(std::istream& in, int order) {
  LineReader r{in};
  std::vector<std::optional<Rational>> values(static_cast<std::size_t>(order));
  while (auto tokens = r.next()) {
    if (tokens->size() != 2) r.fail("expected '<vertex> <value>'");
    std::int64_t v = r.integer((*tokens)[0]);
    if (v < 0 || v >= order) r.fail("vertex " + std::to_string(v) + " out of range");
    auto& slot = values[static_cast<std::size_t>(v)];
    if (slot) r.fail("vertex " + std::to_string(v) + " listed twice");
    slot = r.rational((*tokens)[1]);
  }
  std::vector<Rational> out;
  out.reserve(values.size());
  for (std::size_t v = 0; v < values.size(); ++v) {
    if (!values[v]) throw InputError("vertex function is missing vertex " + std::to_string(v));
    out.push_back(*values[v]);
  }
  return VertexFunction(std::move(out));
}

Form read_form(std::istream& in, const CliqueComplex& c) {
  LineReader r{in};
  std::optional<Form> form;
  std::vector<char> assigned;
  while (auto tokens = r.next()) {
    if (tokens->size() < 2) r.fail("expected '<v0> ... <vk> <value>'");
    std::vector<Vertex> tuple;
    for (std::size_t i = 0; i + 1 < tokens->size(); ++i) {
      std::int64_t v = r.integer((*tokens)[i]);
      if (v < 0 || v > INT32_MAX) r.fail("vertex id out of range");
      tuple.push_back(static_cast<Vertex>(v));
    }
    Rational value = r.rational(tokens->back());
    int level = static_cast<int>(tuple.size()) - 1;
    if (!form) {
      form = zero_form(c, level);
      assigned.assign(form->values.size(), 0);
    } else if (form->level != level) {
      r.fail("mixed form levels " + std::to_string(form->level) + " and " + std::to_string(level));
    }
    auto [simplex, sign] = canonicalize(tuple);
    if (sign == 0) r.fail("repeated vertex in simplex");
    auto idx = c.find(simplex);
    if (!idx) r.fail("simplex is not a clique of the graph");
    if (assigned[*idx]) r.fail("simplex listed twice");
    assigned[*idx] = 1;
    form->values[*idx] = Rational(sign) * value;
  }
  if (!form) throw InputError("form file has no entries");
  return *form;
}

void write_form(std::ostream& out, const CliqueComplex& c, const Form& f) {
  auto layer = c.layer(f.level);
  for (std::size_t i = 0; i < layer.size(); ++i) {
    for (Vertex v : layer[i].verts) out << v << ' ';
    out << f.values[i].str() << '\n';
  }
}

}  // namespace graphgeo::io
