// One PASS/FAIL line per acceptance criterion. Usage: acceptance [1..10]...
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "diagmon/counting.hpp"
#include "diagmon/diagram.hpp"
#include "diagmon/graphs.hpp"
#include "diagmon/oracle.hpp"
#include "diagmon/repdims.hpp"
#include "diagmon/semigroup.hpp"
#include "diagmon/tables.hpp"
#include "golden_tables.hpp"

using namespace diagmon;

namespace {

struct Outcome {
  std::vector<std::string> failures;
  std::size_t checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
  template <class A, class B>
  void equal(const A& got, const B& want, const std::string& what) {
    std::ostringstream os;
    os << what << ": got " << got << ", want " << want;
    expect(got == want, os.str());
  }
};

void verify_all(Outcome& out, const std::string& id, unsigned lo, unsigned hi) {
  for (const auto& r : verify_theorem(id, lo, hi))
    out.expect(r.pass, id + " " + r.instance + (r.witness ? " (" + *r.witness + ")" : ""));
}

// ------------------------------------------------------------ criteria

void table_goldens(Outcome& out) {
  for (const auto& [id, printed] : golden_tables()) {
    Table t = make_table(id);
    std::vector<std::vector<std::string>> ours{t.header};
    for (const auto& row : t.rows) ours.push_back(row);
    out.equal(ours.size(), printed.size(), "table " + std::to_string(id) + " row count");
    for (std::size_t i = 0; i < std::min(ours.size(), printed.size()); ++i) {
      if (i == 0) continue;  // header labels are typographic
      auto want = printed[i], got = ours[i];
      if (id == 7 && want[0] == "d_n") {  // n <= 5 only
        want.resize(5);
        got.resize(std::min<std::size_t>(got.size(), 5));
      }
      out.expect(got == want, "table " + std::to_string(id) + " row " + printed[i][0]);
    }
  }
  for (unsigned n = 2; n <= 5; ++n)
    out.equal(balanced_subgraph_count(projection_graph(Family::Brauer, n)),
              BigCount(golden_tables().at(7)[2][n - 1]), "d_" + std::to_string(n));
}

void formula_vs_enumeration(Outcome& out) {
  verify_all(out, "rank_formula_partition", 1, 5);
  verify_all(out, "rank_formula_brauer", 1, 6);
  verify_all(out, "rank_formula_jones", 1, 10);
  verify_all(out, "rank_formula_transformation", 2, 5);
}

void triangle(Outcome& out) {
  verify_all(out, "min_idgen_triangle_partition", 2, 3);
  out.equal(brute_min_idgen_count(Family::Partition, 3), 20, "P_3 closure count");
  verify_all(out, "min_idgen_triangle_jones", 2, 6);
  out.equal(brute_min_idgen_count(Family::Jones, 1), fibonacci(1), "J_1 closure count");
  verify_all(out, "min_idgen_triangle_brauer", 3, 4);
  out.equal(brute_min_idgen_count(Family::Brauer, 3), 6, "B_3 closure count");
  out.equal(brute_min_idgen_count(Family::Brauer, 4), 265, "B_4 closure count");
  out.equal(balanced_subgraph_count(projection_graph(Family::Brauer, 4)), 265, "Lambda_4 permanent");
}

void permanents(Outcome& out) {
  for (unsigned n = 1; n <= 6; ++n)
    out.equal(balanced_subgraph_count(projection_graph(Family::Partition, n)), partition_gsets(n),
              "Gamma_" + std::to_string(n));
  out.equal(partition_gsets(6), 40915, "|G_6|");
  out.equal(balanced_subgraph_count(projection_graph(Family::Brauer, 5)), 126140, "Lambda_5");
  out.equal(permanent(projection_graph(Family::Brauer, 6).blue_matrix(), PermanentMethod::Ryser),
            855966411, "Lambda_6 by Ryser");
}

void generation_criteria(Outcome& out) {
  verify_all(out, "jones_red_circuit_equivalence", 4, 5);
  out.equal(brute_idgen_subset_count(Family::Jones, 4), 41, "f_4 by closure");
  out.equal(brute_idgen_subset_count(Family::Jones, 5), 247, "f_5 by closure");
  verify_all(out, "rbr_iff_generates_partition", 2, 2);
  verify_all(out, "rbr_iff_generates_brauer", 3, 3);
}

bool closure_generates(Family f, unsigned n, const std::vector<PartitionDiagram>& x) {
  return is_generating(x, singular_part(f, n));
}

std::string label_list(const TwoColouredDiGraph& g, const std::vector<unsigned>& vs) {
  std::string s;
  for (unsigned v : vs) s += (s.empty() ? "" : ",") + g.labels[v];
  return s;
}

void counterexamples(Outcome& out) {
  {
    auto f = named_generators("pi1,pi2,lam12,rho12", 2);
    auto g = add_red(projection_graph(Family::Partition, 2), f);
    auto v = rbr_generates(g);
    out.expect(!v.holds, "P_2 example: RBR should fail");
    out.equal(label_list(g, v.failing), std::string("12"), "P_2 example witness");
    out.expect(!closure_generates(Family::Partition, 2, f), "P_2 example: closure should fail");
  }
  {
    auto f = named_generators("pi2,pi3,pi12,pi23,pi13,lam31,rho12", 3);
    auto g = add_red(projection_graph(Family::Partition, 3), f);
    out.expect(rbr_generates(g).holds, "P_3 example: RBR should hold");
    out.expect(closure_generates(Family::Partition, 3, f), "P_3 example: closure should hold");
    auto word = multiply(multiply(multiply(multiply(named_generator("rho12", 3), named_generator("pi2", 3)),
                                           named_generator("pi23", 3)),
                                  named_generator("pi3", 3)),
                         named_generator("lam31", 3));
    out.expect(multiply(word, word) == named_generator("pi1", 3), "P_3 example: pi1 as a word");
  }
  {
    auto f = named_generators("tau14,tau23,sig214,sig231,sig234,sig241,sig314,sig321,sig324,sig341", 4);
    auto g = add_red(projection_graph(Family::Brauer, 4), f);
    out.expect(red_in_out(g).holds, "B_4 set: red in/out should hold");
    auto v = rbr_generates(g);
    out.expect(!v.holds, "B_4 set: RBR should fail");
    out.expect(!v.failing.empty() && g.labels[v.failing.front()] == "12", "B_4 set: witness 12");
    out.expect(!closure_generates(Family::Brauer, 4, f), "B_4 set: closure should fail");
  }
  {
    auto f = named_generators("tau13,tau23,sig213,sig321", 3);
    auto g = add_red(projection_graph(Family::Brauer, 3), f);
    auto rc = red_circuit_cover(g);
    out.expect(!rc.holds, "B_3 set: red circuit should fail");
    out.equal(label_list(g, rc.failing), std::string("12"), "B_3 set red-circuit witness");
    out.expect(rbr_generates(g).holds, "B_3 set: RBR should hold");
    out.expect(closure_generates(Family::Brauer, 3, f), "B_3 set: closure should hold");
  }
  {
    auto f = named_generators("tau1,tau3,lam1,lam2", 4);
    auto g = add_red(projection_graph(Family::Jones, 4), f);
    auto v = rbr_generates(g);
    out.expect(!v.holds, "J_4 set: RBR should fail");
    out.equal(label_list(g, v.failing), std::string("2"), "J_4 set witness");
    out.expect(!closure_generates(Family::Jones, 4, f), "J_4 set: closure should fail");
  }
}

void tournaments(Outcome& out) {
  for (unsigned n = 1; n <= 6; ++n)
    out.equal(brute_strong_tournaments(n), strong_tournaments_w(n), "w_" + std::to_string(n));
  out.equal(brute_strong_tournaments(6), 22320, "w_6 by brute force");
  verify_all(out, "tournament_criterion", 3, 4);
}

PartitionDiagram random_diagram(std::mt19937_64& rng, unsigned n) {
  std::vector<unsigned> lab(2 * n);
  std::uniform_int_distribution<unsigned> pick(0, 2 * n - 1);
  for (auto& l : lab) l = pick(rng);
  return PartitionDiagram::from_labels(n, lab.data());
}

void laws(Outcome& out) {
  auto check_triple = [&out](const PartitionDiagram& a, const PartitionDiagram& b, const PartitionDiagram& c) {
    auto ab = compose(a, b), bc = compose(b, c);
    auto ab_c = compose(ab.product, c), a_bc = compose(a, bc.product);
    bool ok = star(star(a)) == a && star(ab.product) == multiply(star(b), star(a)) &&
              multiply(multiply(a, star(a)), a) == a && ab_c.product == a_bc.product &&
              ab.m + ab_c.m == bc.m + a_bc.m;
    if (!ok) out.expect(false, "law failure at " + a.to_string() + " " + b.to_string() + " " + c.to_string());
    else ++out.checks;
  };
  auto p2 = enumerate_diagrams(Family::Partition, 2);
  for (const auto& a : p2)
    for (const auto& b : p2)
      for (const auto& c : p2) check_triple(a, b, c);

  auto p3 = enumerate_diagrams(Family::Partition, 3);
  out.equal(p3.size(), 203u, "|P_3|");
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::size_t> idx(0, p3.size() - 1);
  for (int t = 0; t < 100000; ++t) check_triple(p3[idx(rng)], p3[idx(rng)], p3[idx(rng)]);

  for (int t = 0; t < 10000; ++t) {
    auto a = random_diagram(rng, 6), b = random_diagram(rng, 6);
    auto ab = multiply(a, b);
    bool ok = rank(ab) <= std::min(rank(a), rank(b)) && is_projection(multiply(a, star(a)));
    if (!ok) out.expect(false, "P_6 pair " + a.to_string() + " " + b.to_string());
    else ++out.checks;
  }
}

void representation_dims(Outcome& out) {
  verify_all(out, "bratteli_dims", 0, 7);
  out.equal(dim_partition_algebra(3, IntegerPartition({1, 1})), 6, "dim A_3^(1,1)");
  out.equal(bratteli_paths(3, IntegerPartition({1, 1})), 6, "paths to (1,1) at level 3");
  for (unsigned n = 0; n <= 12; ++n) {
    BigCount sum = 0;
    for (unsigned r = n % 2; r <= n; r += 2) {
      BigCount d = dim_tl_algebra(n, r);
      sum += d * d;
    }
    out.equal(sum, catalan(n), "TL square sum n=" + std::to_string(n));
  }
  for (unsigned r = 0; r <= 6; ++r)
    for (const auto& lam : partitions_of(r))
      out.equal(std_tableaux_count(lam), brute_standard_fillings(lam), "tableaux " + lam.to_string());
}

void structural(Outcome& out) {
  verify_all(out, "strong_hall_partition", 2, 4);
  verify_all(out, "strong_hall_brauer", 2, 6);
  verify_all(out, "strong_hall_jones", 2, 10);
  verify_all(out, "idempotent_count_jnm1", 2, 5);
  verify_all(out, "product_table_partition", 2, 6);
  verify_all(out, "product_table_brauer", 3, 6);
  verify_all(out, "product_table_jones", 3, 6);
  verify_all(out, "planar_jones_isomorphism", 1, 3);
}

const std::vector<std::pair<std::string, std::function<void(Outcome&)>>>& criteria() {
  static const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> c = {
      {"table goldens", table_goldens},
      {"rank formulas match Green's class enumeration", formula_vs_enumeration},
      {"minimal idempotent generating sets: closure, balanced subgraphs, formula", triangle},
      {"permanent cross-check", permanents},
      {"generation criteria against closure, exhaustive", generation_criteria},
      {"named counterexamples", counterexamples},
      {"tournament suite", tournaments},
      {"algebraic laws", laws},
      {"representation dimensions", representation_dims},
      {"structural checks", structural},
  };
  return c;
}

bool run(int k) {
  const auto& [name, fn] = criteria()[static_cast<std::size_t>(k - 1)];
  Outcome out;
  auto t0 = std::chrono::steady_clock::now();
  std::string error;
  try {
    fn(out);
  } catch (const std::exception& e) {
    error = e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool pass = error.empty() && out.failures.empty();
  std::printf("criterion %2d: %s  %s (%zu checks, %.1fs)\n", k, pass ? "PASS" : "FAIL", name.c_str(),
              out.checks, secs);
  if (!error.empty()) std::printf("    error: %s\n", error.c_str());
  for (std::size_t i = 0; i < out.failures.size() && i < 20; ++i)
    std::printf("    %s\n", out.failures[i].c_str());
  std::fflush(stdout);
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) {
    int k = std::atoi(argv[i]);
    if (k < 1 || k > static_cast<int>(criteria().size())) {
      std::fprintf(stderr, "usage: acceptance [1..10]...\n");
      return 2;
    }
    which.push_back(k);
  }
  if (which.empty())
    for (int k = 1; k <= static_cast<int>(criteria().size()); ++k) which.push_back(k);
  bool all = true;
  for (int k : which) all = run(k) && all;
  return all ? 0 : 1;
}
