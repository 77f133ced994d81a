#include "doctest.h"

#include <random>
#include <set>

#include "diagmon/graphs.hpp"
#include "diagmon/semigroup.hpp"

using namespace diagmon;

namespace {

std::set<Arc> red_arcs(const TwoColouredDiGraph& g,
                       std::initializer_list<std::pair<const char*, const char*>> named) {
  std::set<Arc> out;
  for (auto [a, b] : named) out.emplace(*g.vertex(a), *g.vertex(b));
  return out;
}

TwoColouredDiGraph coloured(Family f, unsigned n, const char* spec) {
  return add_red(projection_graph(f, n), named_generators(spec, n));
}

// A plain digraph with blue loops everywhere plus the given arcs.
TwoColouredDiGraph triangle() {
  TwoColouredDiGraph g;
  g.labels = {"1", "2", "3"};
  for (unsigned a = 0; a < 3; ++a)
    for (unsigned b = 0; b < 3; ++b) g.blue.emplace(a, b);
  g.red = {{2, 0}, {0, 1}};
  return g;
}

Matrix01 ones(unsigned n) { return Matrix01(n, std::vector<std::uint8_t>(n, 1)); }

}  // namespace

TEST_CASE("projection graph shapes") {
  for (unsigned n = 2; n <= 8; ++n) {
    auto xi = projection_graph(Family::Jones, n);
    REQUIRE(xi.size() == n - 1);
    for (unsigned i = 0; i + 1 < n; ++i) {
      CHECK(xi.labels[i] == std::to_string(i + 1));
      for (unsigned j = 0; j + 1 < n; ++j)
        CHECK((xi.blue.count({i, j}) == 1) == (i <= j + 1 && j <= i + 1));
    }
  }

  auto g5 = projection_graph(Family::Partition, 5);
  CHECK(g5.size() == 15);
  CHECK(g5.labels.front() == "1");
  CHECK(g5.labels[1] == "12");
  for (unsigned v = 0; v < g5.size(); ++v) CHECK(g5.blue.count({v, v}) == 1);
  CHECK(g5.blue.size() == 15 + 4 * 10);
  for (auto [p, q] : g5.blue) {
    if (p == q) continue;
    auto a = g5.labels[p], b = g5.labels[q];
    if (a.size() == 2) std::swap(a, b);
    REQUIRE(a.size() == 1);
    CHECK(b.find(a) != std::string::npos);
  }

  auto l4 = projection_graph(Family::Brauer, 4);
  CHECK(l4.labels == std::vector<std::string>{"12", "13", "14", "23", "24", "34"});

  for (auto f : {Family::Partition, Family::Brauer, Family::Jones})
    for (unsigned n = 2; n <= 5; ++n) {
      auto g = projection_graph(f, n);
      for (auto [p, q] : g.blue) CHECK(g.blue.count({q, p}) == 1);
    }
}

TEST_CASE("projections match idempotent enumeration") {
  for (auto f : {Family::Partition, Family::Brauer, Family::Jones, Family::PlanarPartition})
    for (unsigned n = 1; n <= 4; ++n)
      for (unsigned r = 0; r <= n; ++r) {
        std::set<PartitionDiagram> expected;
        for (const auto& a : enumerate_diagrams(f, n))
          if (rank(a) == r && is_projection(a)) expected.insert(a);
        auto got = projections(f, n, r);
        CHECK(std::set<PartitionDiagram>(got.begin(), got.end()) == expected);
        CHECK(got.size() == expected.size());
      }
}

TEST_CASE("blue edges biject with idempotents") {
  for (auto f : {Family::Partition, Family::Brauer, Family::Jones})
    for (unsigned n = 2; n <= 5; ++n) {
      auto g = projection_graph(f, n);
      std::set<PartitionDiagram> products;
      for (auto [p, q] : g.blue) products.insert(multiply(g.projections[p], g.projections[q]));
      std::set<PartitionDiagram> idem;
      for (const auto& a : enumerate_diagrams(f, n))
        if (static_cast<int>(rank(a)) == top_singular_rank(f, n) && is_idempotent(a)) idem.insert(a);
      CHECK(products == idem);
      CHECK(g.blue.size() == idem.size());
    }
}

TEST_CASE("graham houghton graphs") {
  auto d3 = graham_houghton(Family::Brauer, 3, 1);
  CHECK(d3.left.size() == 3);
  CHECK(d3.edge_count() == 9);
  for (unsigned n = 2; n <= 5; ++n)
    CHECK(graham_houghton(Family::Partition, n, n - 1).edge_count() == (5 * n * n - 3 * n) / 2);
  for (unsigned n = 3; n <= 9; ++n)
    CHECK(graham_houghton(Family::Jones, n, n - 2).edge_count() == 3 * (n - 1) - 2);
}

TEST_CASE("red arcs decode idempotents") {
  auto g2 = coloured(Family::Partition, 2, "pi1,pi2,lam12,rho12");
  CHECK(g2.red == red_arcs(g2, {{"1", "1"}, {"2", "2"}, {"12", "2"}, {"1", "12"}}));

  auto x4 = coloured(Family::Jones, 4, "tau1,tau3,lam1,lam2");
  CHECK(x4.red == red_arcs(x4, {{"1", "1"}, {"3", "3"}, {"1", "2"}, {"2", "3"}}));

  CHECK(add_red(projection_graph(Family::Jones, 4), {}).red.empty());
  CHECK_THROWS_AS(add_red(projection_graph(Family::Jones, 4), {PartitionDiagram::identity(4)}),
                  std::invalid_argument);
}

TEST_CASE("RBR circuits") {
  auto g2 = coloured(Family::Partition, 2, "pi1,pi2,lam12,rho12");
  auto v2 = rbr_generates(g2);
  CHECK_FALSE(v2.holds);
  REQUIRE(v2.failing.size() == 1);
  CHECK(g2.labels[v2.failing[0]] == "12");

  auto g3 = coloured(Family::Partition, 3, "pi2,pi3,pi12,pi23,pi13,lam31,rho12");
  auto v3 = rbr_generates(g3);
  CHECK(v3.holds);
  // witnesses alternate red and blue, starting and ending red
  for (unsigned v = 0; v < g3.size(); ++v) {
    const auto& w = v3.witnesses[v];
    REQUIRE(w.size() >= 2);
    CHECK(w.front() == v);
    CHECK(w.back() == v);
    for (std::size_t k = 0; k + 1 < w.size(); ++k)
      CHECK((k % 2 == 0 ? g3.red : g3.blue).count({w[k], w[k + 1]}) == 1);
    CHECK(w.size() % 2 == 0);
  }

  auto x4 = coloured(Family::Jones, 4, "tau1,tau3,lam1,lam2");
  auto vx = rbr_generates(x4);
  CHECK_FALSE(vx.holds);
  REQUIRE(vx.failing.size() == 1);
  CHECK(x4.labels[vx.failing[0]] == "2");
}

TEST_CASE("red circuits versus RBR") {
  auto x = projection_graph(Family::Jones, 5);
  for (unsigned v = 0; v < x.size(); ++v) x.red.emplace(v, v);
  CHECK(red_circuit_cover(x).holds);

  auto l3 = coloured(Family::Brauer, 3, "tau13,tau23,sig213,sig321");
  auto rc = red_circuit_cover(l3);
  CHECK_FALSE(rc.holds);
  REQUIRE(rc.failing.size() == 1);
  CHECK(l3.labels[rc.failing[0]] == "12");
  CHECK(rbr_generates(l3).holds);

  auto t = triangle();
  auto tv = red_circuit_cover(t);
  CHECK_FALSE(tv.holds);
  CHECK(tv.failing == std::vector<unsigned>{0, 1, 2});
  auto tr = rbr_generates(t);
  CHECK_FALSE(tr.holds);
  CHECK(tr.failing == std::vector<unsigned>{1, 2});
}

TEST_CASE("criterion implications on random graphs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    TwoColouredDiGraph g;
    unsigned n = 2 + rng() % 5;
    for (unsigned v = 0; v < n; ++v) g.labels.push_back(std::to_string(v));
    for (unsigned a = 0; a < n; ++a) {
      g.blue.emplace(a, a);
      for (unsigned b = a + 1; b < n; ++b)
        if (rng() % 2) {
          g.blue.emplace(a, b);
          g.blue.emplace(b, a);
        }
    }
    for (unsigned a = 0; a < n; ++a)
      for (unsigned b = 0; b < n; ++b)
        if (rng() % 3 == 0) g.red.emplace(a, b);
    bool cover = red_circuit_cover(g).holds;
    bool rbr = rbr_generates(g).holds;
    bool inout = red_in_out(g).holds;
    if (cover) CHECK(rbr);
    if (rbr) CHECK(inout);
  }
}

TEST_CASE("permanents") {
  Matrix01 id(5, std::vector<std::uint8_t>(5, 0));
  for (unsigned i = 0; i < 5; ++i) id[i][i] = 1;
  CHECK(permanent(id) == 1);
  CHECK(permanent(ones(4)) == 24);
  CHECK(permanent(ones(12), PermanentMethod::Ryser) == factorial(12));
  CHECK(permanent(ones(12), PermanentMethod::Sparse) == factorial(12));
  CHECK(permanent(ones(24), PermanentMethod::Ryser) == factorial(24));
  CHECK(permanent(Matrix01{}) == 1);
  CHECK_THROWS_AS(permanent(Matrix01{{1, 0}}), std::invalid_argument);

  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    unsigned n = 1 + rng() % 10;
    Matrix01 a(n, std::vector<std::uint8_t>(n));
    for (auto& row : a)
      for (auto& x : row) x = rng() % 2;
    CHECK(permanent(a, PermanentMethod::Ryser) == permanent(a, PermanentMethod::Sparse));
  }

  CHECK(balanced_subgraph_count(projection_graph(Family::Partition, 5)) == 2604);
}

TEST_CASE("balanced subgraphs") {
  CHECK(balanced_subgraph_count(projection_graph(Family::Partition, 2)) == 3);
  CHECK(balanced_subgraph_count(projection_graph(Family::Jones, 6)) == 8);
  CHECK(balanced_subgraph_count(projection_graph(Family::Brauer, 4)) == 265);
  for (unsigned n = 2; n <= 12; ++n)
    CHECK(balanced_subgraph_count(projection_graph(Family::Jones, n)) == fibonacci(n));

  for (auto f : {Family::Partition, Family::Brauer})
    for (unsigned n = 2; n <= 4; ++n) {
      auto g = projection_graph(f, n);
      auto all = balanced_subgraphs(g);
      CHECK(BigCount(static_cast<unsigned long>(all.size())) == balanced_subgraph_count(g));
      for (const auto& succ : all) {
        std::set<unsigned> image(succ.begin(), succ.end());
        CHECK(image.size() == g.size());
        for (unsigned v = 0; v < g.size(); ++v) CHECK(g.blue.count({v, succ[v]}) == 1);
      }
    }
  CHECK_THROWS_AS(balanced_subgraphs(projection_graph(Family::Brauer, 4), 10), std::length_error);
}

TEST_CASE("strong hall") {
  BipartiteGraph k33{{"a", "b", "c"}, {"x", "y", "z"}, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}};
  CHECK(strong_hall(k33));
  CHECK(strong_hall_matching(k33));
  BipartiteGraph m3{{"a", "b", "c"}, {"x", "y", "z"}, {{0}, {1}, {2}}};
  CHECK_FALSE(strong_hall(m3));
  CHECK_FALSE(strong_hall_matching(m3));
  BipartiteGraph bad{{"a"}, {"x", "y"}, {{0}}};
  CHECK_THROWS_AS(strong_hall(bad), std::invalid_argument);

  for (unsigned n = 4; n <= 6; ++n)
    CHECK(strong_hall(graham_houghton(Family::Brauer, n, n - 2)));

  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    unsigned m = 1 + rng() % 7;
    BipartiteGraph d;
    for (unsigned i = 0; i < m; ++i) {
      d.left.push_back(std::to_string(i));
      d.right.push_back(std::to_string(i));
      std::vector<unsigned> row;
      for (unsigned j = 0; j < m; ++j)
        if (rng() % 2) row.push_back(j);
      d.adj.push_back(row);
    }
    CHECK(strong_hall_exhaustive(d) == strong_hall_matching(d));
  }
}

TEST_CASE("tournaments") {
  using T = Transformation;
  CHECK(tournament_generates({T::elementary(3, 1, 2), T::elementary(3, 2, 3), T::elementary(3, 3, 1)}));
  CHECK_FALSE(
      tournament_generates({T::elementary(3, 1, 2), T::elementary(3, 1, 3), T::elementary(3, 2, 3)}));
  CHECK_FALSE(tournament_generates({T::elementary(3, 1, 2), T::elementary(3, 2, 3)}));
  CHECK_THROWS_AS(tournament_generates({T({1, 1, 1})}), std::invalid_argument);
  auto sing3 = enumerate_transformations(Family::SingularTransformation, 3);
  CHECK(is_generating({T::elementary(3, 1, 2), T::elementary(3, 2, 3), T::elementary(3, 3, 1)}, sing3));
}

TEST_CASE("johnson graphs") {
  auto j4 = johnson_graph(4);
  CHECK(j4.labels.size() == 6);
  CHECK(j4.edges.size() == 12);
  auto j5 = johnson_graph(5);
  CHECK(j5.labels.size() == 10);
  std::vector<unsigned> deg(10, 0);
  for (auto [a, b] : j5.edges) {
    ++deg[a];
    ++deg[b];
  }
  for (unsigned d : deg) CHECK(d == 6);
  for (unsigned n = 4; n <= 7; ++n) CHECK(johnson_iso_check(n));
}

TEST_CASE("exports") {
  auto g = coloured(Family::Partition, 2, "pi1,pi2,lam12,rho12");
  auto dot = to_dot(g);
  CHECK(dot.find("digraph") == 0);
  CHECK(dot.find("color=red") != std::string::npos);
  CHECK(dot.find("v0 -> v0 [color=blue]") != std::string::npos);
  auto j = to_json(projection_graph(Family::Jones, 5));
  CHECK(j["vertices"].size() == 4);
  CHECK(j["blue"].size() == 10);
  CHECK(to_dot(g) == dot);
}
