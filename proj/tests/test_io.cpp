#include <catch_amalgamated.hpp>

#include <sstream>

#include "graphgeo/io.hpp"
#include "support.hpp"

using namespace graphgeo;
using support::gen;

namespace {

Graph parse(const std::string& text) {
  std::istringstream in(text);
  return io::read_graph(in);
}

}  // namespace

TEST_CASE("graph format round trip") {
  for (const auto& info : generator_registry()) {
    Graph g = gen(info.name, info.example_params);
    std::ostringstream out;
    io::write_graph(out, g, info.name);
    CHECK(parse(out.str()) == g);
  }
  CHECK(parse("# nothing\n\np 0\n").order() == 0);
  Graph g = parse("p 3\n# middle comment\ne 0 1\n\ne 2 1\n");
  CHECK(g.size() == 2);
  CHECK(g.adjacent(1, 2));
}

TEST_CASE("malformed graph files") {
  for (const char* text : {"", "# only a comment\n", "e 0 1\np 2\n", "p 2\np 2\n", "p -1\n", "p x\n", "p 2\ne 0 0\n",
                           "p 2\ne 0 1\ne 1 0\n", "p 2\ne 0 2\n", "p 2\ne 0\n", "p 2\ne 0 1 1\n", "p 2\nq 0 1\n",
                           "p 2\ne 0 1x\n", "p 3 4\n"}) {
    INFO(text);
    CHECK_THROWS_AS(parse(text), InputError);
  }
  try {
    parse("p 3\ne 0 1\ne 1 1\n");
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("vertex functions") {
  std::istringstream ok("0 1/2\n# c\n2 -3\n1 7/3\n");
  auto f = io::read_vertex_function(ok, 3);
  CHECK(f(0) == Rational(1, 2));
  CHECK(f(2) == Rational(-3));
  for (const char* text : {"0 1\n1 1\n2 3\n", "0 1\n1 2\n", "0 1\n0 2\n1 3\n2 4\n", "0 1\n1 2\n3 3\n", "0 a\n1 2\n2 3\n",
                           "0 1 2\n1 2\n2 3\n"}) {
    INFO(text);
    std::istringstream in(text);
    CHECK_THROWS_AS(io::read_vertex_function(in, 3), InputError);
  }
}

TEST_CASE("forms") {
  auto c = clique_complex(gen("complete", {3}));
  std::istringstream in("1 0 5\n2 1 -1/2\n");
  Form f = io::read_form(in, c);
  CHECK(f.level == 1);
  // layer 1: (0,1) (0,2) (1,2); written order (1,0) and (2,1) flip signs
  CHECK(f.values == std::vector<Rational>{Rational(-5), Rational(0), Rational(1, 2)});

  std::ostringstream out;
  io::write_form(out, c, f);
  std::istringstream back(out.str());
  CHECK(io::read_form(back, c) == f);

  for (const char* text : {"", "0 1 5\n0 1 2 3\n", "0 1 5\n1 0 2\n", "0 0 1\n", "0 3 1\n", "0 1 x\n"}) {
    INFO(text);
    std::istringstream bad(text);
    CHECK_THROWS_AS(io::read_form(bad, c), InputError);
  }
  auto path = clique_complex(gen("path", {3}));
  std::istringstream nonclique("0 2 1\n");
  CHECK_THROWS_AS(io::read_form(nonclique, path), InputError);
}
