#include <doctest.h>

#include "cyclospec/cayley.hpp"
#include "cyclospec/oracle.hpp"

using namespace cyclospec;

namespace {

Graph cyc(long n) { return cayley_graph(GroupSpec::cyclic(n), GeneratorSet::standard(GroupSpec::cyclic(n))); }

Graph std_cayley(std::vector<long> orders) {
  GroupSpec g(std::move(orders));
  return cayley_graph(g, GeneratorSet::standard(g));
}

}  // namespace

TEST_SUITE("cayley") {

TEST_CASE("group elements and arithmetic") {
  GroupSpec g({2, 3});
  CHECK(g.order() == 6);
  CHECK_FALSE(g.is_cyclic());
  CHECK(g.name() == "Z2xZ3");
  const auto els = g.elements();
  REQUIRE(els.size() == 6);
  CHECK(els[0] == Element{0, 0});
  CHECK(els[1] == Element{0, 1});
  CHECK(els[5] == Element{1, 2});
  CHECK(g.index_of({1, 0}) == 3);
  CHECK(g.reduce({3, -1}) == Element{1, 2});
  CHECK(g.add({1, 2}, {1, 2}) == Element{0, 1});
  CHECK(g.inverse({1, 1}) == Element{1, 2});
  CHECK(g.is_identity({2, 3}) == false);
  CHECK(g.is_identity(g.reduce({2, 3})));
}

TEST_CASE("generator sets") {
  const auto z6 = GroupSpec::cyclic(6);
  GeneratorSet s(z6, {{7}, {1}, {2}});
  CHECK(s.generators() == std::vector<Element>{{1}, {2}});
  CHECK_THROWS_AS(GeneratorSet(z6, {{6}}), IdentityGeneratorError);
  CHECK(GeneratorSet::standard(GroupSpec({2, 3})).generators() == std::vector<Element>{{0, 1}, {1, 0}});
  CHECK(GeneratorSet::standard(GroupSpec::cyclic(1)).generators().empty());
}

TEST_CASE("cayley_graph") {
  SUBCASE("Z2 is a single edge") {
    const Graph g = cyc(2);
    CHECK(g.vertex_count() == 2);
    CHECK(g.edges().size() == 1);
    CHECK(laplacian_of(g) == IntMatrix::from_rows({{1, -1}, {-1, 1}}));
  }
  SUBCASE("Zn is the n-cycle") {
    for (long n = 3; n <= 12; ++n) {
      const Graph g = cyc(n);
      CHECK(g.edges().size() == static_cast<std::size_t>(n));
      for (long v = 0; v < n; ++v) {
        CHECK(g.degree(v) == 2);
        CHECK(g.has_edge(v, (v + 1) % n));
      }
    }
  }
  SUBCASE("Z2xZ2 is the same graph as Z4") {
    const Graph k = std_cayley({2, 2});
    CHECK(k.edges().size() == 4);
    CHECK(isomorphic_small(k, cyc(4)));
  }
  SUBCASE("trivial group") {
    const Graph g = cyc(1);
    CHECK(g.vertex_count() == 1);
    CHECK(g.edges().empty());
  }
  CHECK_THROWS(cayley_graph(GroupSpec::cyclic(5), GeneratorSet(GroupSpec::cyclic(5), {})));
}

TEST_CASE("laplacian_of") {
  CHECK(laplacian_of(cyc(1)) == IntMatrix::from_rows({{0}}));
  CHECK(laplacian_of(cyc(4)) ==
        IntMatrix::from_rows({{2, -1, 0, -1}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {-1, 0, -1, 2}}));
  CHECK(laplacian_of(Graph(3)) == IntMatrix(3));
}

TEST_CASE("graph primitives") {
  Graph g(3);
  g.add_edge(2, 0);
  CHECK(g.has_edge(0, 2));
  CHECK(g.has_edge(2, 0));
  g.add_edge(0, 2);
  CHECK(g.edges().size() == 1);
  CHECK_THROWS(g.add_edge(1, 1));
  CHECK_THROWS(g.add_edge(0, 3));
  CHECK_THROWS_AS(IntMatrix::from_rows({{1, 2}, {3}}), DimensionError);
  CHECK_FALSE(IntMatrix::from_rows({{0, 1}, {2, 0}}).is_symmetric());
}

TEST_CASE("complement") {
  const Graph c6 = cyc(6);
  CHECK(complement(complement(c6)) == c6);
  const Graph cc6 = complement(c6);
  for (long v = 0; v < 6; ++v) CHECK(cc6.degree(v) == 3);
  CHECK(isomorphic_small(cc6, std_cayley({2, 3})));
  CHECK(complement(complete_graph(4)).edges().empty());
}

TEST_CASE("isomorphic_small") {
  CHECK(isomorphic_small(cyc(4), std_cayley({2, 2})));
  CHECK_FALSE(isomorphic_small(cyc(4), path_graph(4)));
  CHECK_FALSE(isomorphic_small(cyc(6), std_cayley({2, 3})));
  CHECK_FALSE(isomorphic_small(cyc(5), cyc(6)));
  CHECK_THROWS_AS(isomorphic_small(cyc(11), cyc(11)), SizeLimitError);
}

TEST_CASE("parse_group_spec") {
  const auto z6 = parse_group_spec("Z6");
  CHECK(z6.group == GroupSpec::cyclic(6));
  CHECK(z6.is_standard_cycle());
  const auto p = parse_group_spec("Z2xZ3");
  CHECK(p.group == GroupSpec({2, 3}));
  CHECK_FALSE(p.is_standard_cycle());
  const auto o = parse_group_spec("Z6[1,2]");
  CHECK(o.gens.generators() == std::vector<Element>{{1}, {2}});
  CHECK_FALSE(o.is_standard_cycle());
  const auto t = parse_group_spec("Z2xZ3[(1,0);(0,1)]");
  CHECK(t.gens.generators() == std::vector<Element>{{0, 1}, {1, 0}});
  CHECK(t.graph() == p.graph());

  for (const char* bad : {"", "Z", "Z0", "Y6", "Z6[", "Z2xZ3[1]", "Z6[a]", "Z2x", "Z6[1,2]x"}) {
    CAPTURE(bad);
    CHECK_THROWS(parse_group_spec(bad));
  }
  CHECK_THROWS_AS(parse_group_spec("Z6[0]"), IdentityGeneratorError);
}

TEST_CASE("laplacian invariants over small groups") {
  const std::vector<std::string> specs{"Z1", "Z2", "Z3", "Z7", "Z8", "Z12", "Z2xZ2", "Z2xZ3", "Z3xZ3",
                                       "Z2xZ2xZ2", "Z6[1,2]", "Z8[1,3]", "Z10[2,5]", "Z4xZ2[(1,1)]"};
  for (const auto& text : specs) {
    CAPTURE(text);
    const auto spec = parse_group_spec(text);
    const IntMatrix lap = laplacian_of(spec.graph());
    const std::size_t n = lap.size();
    CHECK(lap.is_symmetric());
    for (std::size_t i = 0; i < n; ++i) {
      long row = 0;
      for (std::size_t j = 0; j < n; ++j) {
        row += lap(i, j);
        if (i != j) CHECK((lap(i, j) == 0 || lap(i, j) == -1));
      }
      CHECK(row == 0);
      CHECK(lap(i, i) == lap(0, 0));
    }
    const auto eig = eig_numeric(lap);
    for (double v : eig) CHECK(v >= -1e-9);
  }
  for (long n = 3; n <= 20; ++n) {
    const auto eig = eig_numeric(laplacian_of(cyc(n)));
    CHECK(std::abs(eig[0]) < 1e-9);
    CHECK(eig[1] > 1e-6);
  }
}

}  // TEST_SUITE
