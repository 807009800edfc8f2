#include "graphgeo/cli.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "graphgeo/forms.hpp"
#include "graphgeo/generators.hpp"
#include "graphgeo/geometry.hpp"
#include "graphgeo/io.hpp"
#include "graphgeo/morse.hpp"
#include "graphgeo/report.hpp"
#include "graphgeo/simplicial.hpp"

namespace graphgeo::cli {

namespace {

struct Options {
  bool json = false;
  std::string file;
  std::string values_file;
  std::string form_file;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> random_seed;
  std::optional<int> dim;
  int limit = kDefaultSphereLikeLimit;
  int seeds = 10;
  bool inject_curvature_fault = false;
  std::string family;
  std::vector<std::int64_t> params;
};

class Inputs {
 public:
  explicit Inputs(std::istream& stdin_stream) : stdin_(stdin_stream) {}

  template <typename F>
  auto with_stream(const std::string& path, F&& f) {
    if (path == "-") {
      if (stdin_used_) throw InputError("standard input can be read only once");
      stdin_used_ = true;
      return f(stdin_);
    }
    std::ifstream file(path);
    if (!file) throw InputError("cannot open '" + path + "'");
    return f(file);
  }

 private:
  std::istream& stdin_;
  bool stdin_used_ = false;
};

std::string simplex_text(const Simplex& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.verts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.verts[i]);
  }
  return out + ")";
}

Json counts_json(const std::vector<std::size_t>& counts) {
  Json j = Json::array();
  for (auto c : counts) j.push_back(c);
  return j;
}

Json chain_json(const Chain& ch) {
  Json j = Json::array();
  for (const auto& [s, a] : ch.coeffs) j.push_back((a > 0 ? "+" : "") + std::to_string(a) + " " + simplex_text(s));
  return j;
}

Verdict verdict_of(bool ok) { return ok ? Verdict::Pass : Verdict::Fail; }

int resolve_dim(const Graph& g, const std::optional<int>& requested) {
  if (requested) {
    if (*requested < 1) throw InputError("--dim must be at least 1");
    return *requested;
  }
  Rational d = dimension(g);
  if (!d.is_integer())
    throw InputError("graph has fractional dimension " + d.str() +
                     "; this command needs an integral dimension (pass --dim K to force a level)");
  if (d.num() < 1) throw InputError("graph has dimension " + d.str() + "; this command needs dimension >= 1");
  return static_cast<int>(d.num());
}

GaussBonnetReport curvature_report(const Graph& g, bool inject_fault) {
  auto gb = gauss_bonnet_verify(g);
  if (inject_fault && !gb.curvature.empty()) {
    auto table = gb.curvature;
    table[0] += Rational(1);
    gb = gauss_bonnet_report(std::move(table), gb.euler_characteristic);
  }
  return gb;
}

Report cmd_info(const Graph& g) {
  Report r;
  r.command = "info";
  auto c = clique_complex(g);
  r.results["order"] = g.order();
  r.results["size"] = g.size();
  r.results["fvec"] = counts_json(c.fvec());
  r.results["euler_characteristic"] = euler_characteristic(c);
  r.results["dimension"] = dimension(g).str();
  r.results["components"] = connected_components(g).size();
  return r;
}

Report cmd_curvature(const Graph& g, const Options& o) {
  Report r;
  r.command = "curvature";
  auto gb = curvature_report(g, o.inject_curvature_fault);
  Table t{"curvature", {"v", "deg", "V(v)", "K(v)"}, {}};
  for (Vertex v = 0; v < g.order(); ++v)
    t.rows.push_back({v, g.degree(v), counts_json(local_counts(g, v)), gb.curvature[static_cast<std::size_t>(v)].str()});
  r.tables.push_back(std::move(t));
  r.results["curvature_sum"] = gb.total.str();
  r.results["euler_characteristic"] = gb.euler_characteristic;
  r.verdict = verdict_of(gb.passed());
  return r;
}

Report cmd_index(const Graph& g, const VertexFunction& f) {
  Report r;
  r.command = "index";
  auto ph = poincare_hopf_verify(g, f);
  Table t{"index", {"v", "f(v)", "V(S-(v))", "chi(S-(v))", "i(v)"}, {}};
  for (Vertex v = 0; v < g.order(); ++v) {
    auto exit_complex = clique_complex(exit_set(g, f, v).graph);
    t.rows.push_back({v, f(v).str(), counts_json(exit_complex.fvec()), euler_characteristic(exit_complex),
                      ph.indices[static_cast<std::size_t>(v)]});
  }
  r.tables.push_back(std::move(t));
  r.results["index_sum"] = ph.index_sum;
  r.results["euler_characteristic"] = ph.euler_characteristic;
  r.results["critical_points"] = ph.critical_points;
  r.verdict = verdict_of(ph.passed());
  return r;
}

Report cmd_betti(const Graph& g) {
  Report r;
  r.command = "betti";
  auto ep = euler_poincare_verify(clique_complex(g));
  r.results["betti"] = ep.betti;
  r.results["cohomological_euler_characteristic"] = ep.cohomological;
  r.results["euler_characteristic"] = ep.combinatorial;
  r.verdict = verdict_of(ep.passed());
  return r;
}

Report cmd_boundary(const Graph& g, int k) {
  Report r;
  r.command = "boundary";
  r.inputs["dim"] = k;
  auto b = boundary_vertices(g, k);
  Table t{"classification", {"v", "S(v) order", "class"}, {}};
  for (Vertex v = 0; v < g.order(); ++v)
    t.rows.push_back({v, g.degree(v), std::string(to_string(b.classes[static_cast<std::size_t>(v)]))});
  r.tables.push_back(std::move(t));
  r.results["boundary"] = b.boundary;
  r.results["is_graph_with_boundary"] = b.is_graph_with_boundary;
  return r;
}

Report cmd_orient(const Graph& g, int k) {
  Report r;
  r.command = "orient";
  r.inputs["dim"] = k;
  auto c = clique_complex(g);
  auto result = orientation_search(c, k);
  if (const auto* o = std::get_if<Orientation>(&result)) {
    r.results["orientable"] = true;
    Table t{"orientation", {"simplex", "sign"}, {}};
    auto top = c.layer(k);
    for (std::size_t i = 0; i < top.size(); ++i) t.rows.push_back({simplex_text(top[i]), o->signs[i]});
    r.tables.push_back(std::move(t));
  } else {
    r.results["orientable"] = false;
    Json w = Json::array();
    for (const auto& s : std::get<NotOrientable>(result).witness) w.push_back(simplex_text(s));
    r.results["witness_cycle"] = w;
  }
  return r;
}

Report cmd_stokes(const Graph& g, const Options& o, Inputs& inputs) {
  Report r;
  r.command = "stokes";
  int k = resolve_dim(g, o.dim);
  r.inputs["dim"] = k;
  auto c = clique_complex(g);
  auto result = orientation_search(c, k);
  const auto* orientation = std::get_if<Orientation>(&result);
  if (!orientation)
    throw InputError("graph is not orientable at level " + std::to_string(k) + "; Stokes needs an orientation");

  Form f;
  if (o.random_seed) {
    r.inputs["random"] = *o.random_seed;
    f = random_form(c, k - 1, *o.random_seed);
  } else {
    r.inputs["form"] = o.form_file;
    f = inputs.with_stream(o.form_file, [&](std::istream& s) { return io::read_form(s, c); });
    if (f.level != k - 1)
      throw InputError("form has level " + std::to_string(f.level) + ", Stokes at level " + std::to_string(k) +
                       " needs a " + std::to_string(k - 1) + "-form");
  }
  auto st = stokes_verify(c, *orientation, f);
  r.results["integral_of_df"] = st.lhs.str();
  r.results["boundary_integral"] = st.rhs.str();
  r.results["boundary_chain"] = chain_json(st.boundary);
  r.results["boundary_is_graph"] = std::holds_alternative<Subgraph>(boundary_as_graph(c, st.boundary));
  r.verdict = verdict_of(st.passed());
  return r;
}

Report cmd_spherelike(const Graph& g, int limit) {
  Report r;
  r.command = "spherelike";
  r.inputs["limit"] = limit;
  r.results["sphere_like"] = sphere_like(g, limit);
  return r;
}

Report cmd_verify(const Graph& g, const Options& o) {
  Report r;
  r.command = "verify";
  r.inputs["seeds"] = o.seeds;
  Table t{"checks", {"check", "lhs", "rhs", "status"}, {}};
  bool all = true;
  auto add = [&](const std::string& name, Json lhs, Json rhs, bool ok) {
    all = all && ok;
    t.rows.push_back({name, std::move(lhs), std::move(rhs), ok ? "pass" : "FAIL"});
  };

  auto c = clique_complex(g);
  auto gb = curvature_report(g, o.inject_curvature_fault);
  add("gauss_bonnet", gb.total.str(), gb.euler_characteristic, gb.passed());

  for (int s = 1; s <= o.seeds; ++s) {
    auto ph = poincare_hopf_verify(g, random_injective_function(g, static_cast<std::uint64_t>(s)));
    add("poincare_hopf seed=" + std::to_string(s), ph.index_sum, ph.euler_characteristic, ph.passed());
  }
  for (const auto& row : check_transfer(g, c).rows)
    add("transfer k=" + std::to_string(row.k), row.lhs, row.rhs, row.holds());
  for (int s = 1; s <= o.seeds; ++s) {
    auto f = random_injective_function(g, static_cast<std::uint64_t>(s));
    for (const auto& row : check_intermediate(g, c, f).rows)
      add("intermediate seed=" + std::to_string(s) + " k=" + std::to_string(row.k), row.lhs, row.rhs, row.holds());
  }
  for (int k = 0; k <= c.top_dim(); ++k) {
    std::size_t nonzero = 0;
    for (int s = 1; s <= o.seeds; ++s) {
      auto ddf = exterior_derivative(c, exterior_derivative(c, random_form(c, k, static_cast<std::uint64_t>(s))));
      for (const auto& v : ddf.values) nonzero += (v != Rational(0)) ? 1 : 0;
    }
    add("dd=0 level=" + std::to_string(k), nonzero, 0, nonzero == 0);
  }
  for (int k = 2; k <= c.top_dim(); ++k) {
    std::size_t nonzero = 0;
    for (int s = 1; s <= o.seeds; ++s)
      nonzero += boundary(c, boundary(c, random_chain(c, k, static_cast<std::uint64_t>(s)))).coeffs.size();
    add("boundary_of_boundary=0 level=" + std::to_string(k), nonzero, 0, nonzero == 0);
  }
  auto ep = euler_poincare_verify(c);
  add("euler_poincare", ep.cohomological, ep.combinatorial, ep.passed());

  std::size_t failed = 0;
  for (const auto& row : t.rows) failed += row[3] == "FAIL" ? 1 : 0;
  r.results["checks_run"] = t.rows.size();
  r.results["checks_failed"] = failed;
  r.tables.push_back(std::move(t));
  r.verdict = verdict_of(all);
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Discrete differential geometry on finite simple graphs", "graphgeo"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Emit the report as JSON");

  auto file_arg = [&](CLI::App* sub) { sub->add_option("FILE", o.file, "Graph file, or - for standard input")->required(); };
  auto dim_opt = [&](CLI::App* sub) {
    sub->add_option("--dim", o.dim, "Level k (default: the graph's dimension when integral)");
  };
  auto fault_opt = [&](CLI::App* sub) {
    // test hook: shifts K(0) by one so the Gauss-Bonnet check must fail
    sub->add_flag("--inject-curvature-fault", o.inject_curvature_fault)->group("");
  };

  auto* info = app.add_subcommand("info", "Order, size, f-vector, Euler characteristic, dimension");
  file_arg(info);
  auto* curv = app.add_subcommand("curvature", "Curvature table and Gauss-Bonnet check");
  file_arg(curv);
  fault_opt(curv);
  auto* idx = app.add_subcommand("index", "Index table and Poincare-Hopf check");
  file_arg(idx);
  auto* values_opt = idx->add_option("--values", o.values_file, "Vertex function file");
  auto* seed_opt = idx->add_option("--seed", o.seed, "Random injective function seed");
  values_opt->excludes(seed_opt);
  auto* betti = app.add_subcommand("betti", "Betti numbers and Euler-Poincare check");
  file_arg(betti);
  auto* bnd = app.add_subcommand("boundary", "Interior/boundary classification");
  file_arg(bnd);
  dim_opt(bnd);
  auto* orient = app.add_subcommand("orient", "Orientation search");
  file_arg(orient);
  dim_opt(orient);
  auto* stokes = app.add_subcommand("stokes", "Green-Stokes check");
  file_arg(stokes);
  dim_opt(stokes);
  auto* form_opt = stokes->add_option("--form", o.form_file, "Form file");
  auto* random_opt = stokes->add_option("--random", o.random_seed, "Random form seed");
  form_opt->excludes(random_opt);
  auto* sphere = app.add_subcommand("spherelike", "Exhaustive sphere-like test");
  file_arg(sphere);
  sphere->add_option("--limit", o.limit, "Largest order searched exhaustively")->check(CLI::Range(0, 12));
  auto* gen = app.add_subcommand("gen", "Write a generated graph");
  gen->add_option("NAME", o.family, "Family name")->required();
  gen->add_option("PARAMS", o.params, "Integer parameters");
  gen->add_option("--seed", o.seed, "Seed for random families");
  auto* verify = app.add_subcommand("verify", "Run every identity check");
  file_arg(verify);
  verify->add_option("--seeds", o.seeds, "Random functions and forms per check")->check(CLI::Range(0, 100000));
  fault_opt(verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  Inputs inputs(in);
  try {
    CLI::App* sub = app.get_subcommands().front();
    if (sub == gen) {
      Graph g = generate(GeneratorSpec{o.family, o.params, o.seed});
      std::string comment = "gen " + o.family;
      for (auto p : o.params) comment += " " + std::to_string(p);
      if (o.seed) comment += " --seed " + std::to_string(*o.seed);
      io::write_graph(out, g, comment);
      return kExitOk;
    }

    Graph g = inputs.with_stream(o.file, [](std::istream& s) { return io::read_graph(s); });
    Report r;
    if (sub == info) {
      r = cmd_info(g);
    } else if (sub == curv) {
      r = cmd_curvature(g, o);
    } else if (sub == idx) {
      if (!o.seed && o.values_file.empty()) throw InputError("index needs --values FILE or --seed N");
      VertexFunction f = o.seed ? random_injective_function(g, *o.seed)
                                : inputs.with_stream(o.values_file, [&](std::istream& s) {
                                    return io::read_vertex_function(s, g.order());
                                  });
      r = cmd_index(g, f);
      if (o.seed)
        r.inputs["seed"] = *o.seed;
      else
        r.inputs["values"] = o.values_file;
    } else if (sub == betti) {
      r = cmd_betti(g);
    } else if (sub == bnd) {
      r = cmd_boundary(g, resolve_dim(g, o.dim));
    } else if (sub == orient) {
      r = cmd_orient(g, resolve_dim(g, o.dim));
    } else if (sub == stokes) {
      if (!o.random_seed && o.form_file.empty()) throw InputError("stokes needs --form FILE or --random SEED");
      r = cmd_stokes(g, o, inputs);
    } else if (sub == sphere) {
      r = cmd_spherelike(g, o.limit);
    } else {
      r = cmd_verify(g, o);
    }
    Json file_input = Json::object();
    file_input["file"] = o.file;
    file_input.update(r.inputs);
    r.inputs = file_input;

    if (o.json)
      out << to_json(r).dump(2) << "\n";
    else
      out << render_text(r);
    return r.verdict == Verdict::Fail ? kExitVerificationFailed : kExitOk;
  } catch (const TooLargeError& e) {
    err << "too large: " << e.what() << "\n";
    return kExitInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ArithmeticOverflow& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace graphgeo::cli
