#include "diagmon/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "diagmon/graphs.hpp"

namespace diagmon {

namespace {

std::uint64_t choose_u64(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigCount c = binomial(n, k);
  return c.fits_ulong_p() ? c.get_ui() : UINT64_MAX;
}

void guard_cost(std::uint64_t cost, const std::string& what) {
  if (cost > kOracleCostGuard)
    throw GuardExceeded(what + ": estimated " + std::to_string(cost) + " closures exceeds guard " +
                        std::to_string(kOracleCostGuard));
}

std::uint64_t min_idgen_size(Family f, unsigned n, int top) {
  if (top < 0) return 0;
  return rank_ideal(f, n, static_cast<unsigned>(top)).get_ui();
}

}  // namespace

SingularIdeal singular_ideal(Family f, unsigned n) {
  if (!is_diagram_family(f)) throw std::invalid_argument("singular_ideal: not a diagram family");
  auto elems = singular_part(f, n);
  int top = n == 0 ? -1 : top_singular_rank(f, n);
  std::vector<std::uint32_t> idem;
  for (std::uint32_t i = 0; i < elems.size(); ++i)
    if (static_cast<int>(rank(elems[i])) == top && is_idempotent(elems[i])) idem.push_back(i);
  CayleyTable table(elems);
  return SingularIdeal{f, n, top, std::move(elems), std::move(table), std::move(idem)};
}

BigCount brute_min_idgen_count(Family f, unsigned n) {
  SingularIdeal s = singular_ideal(f, n);
  const unsigned m = static_cast<unsigned>(s.top_idempotents.size());
  const unsigned k = static_cast<unsigned>(min_idgen_size(f, n, s.top_rank));
  guard_cost(choose_u64(m, k), "brute_min_idgen_count");
  if (k > m) return 0;
  std::vector<unsigned> pick(k);
  std::iota(pick.begin(), pick.end(), 0u);
  std::vector<std::uint32_t> gens(k);
  std::uint64_t count = 0;
  while (true) {
    for (unsigned i = 0; i < k; ++i) gens[i] = s.top_idempotents[pick[i]];
    if (s.generates(gens)) ++count;
    // next k-combination in lexicographic order
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && pick[static_cast<unsigned>(i)] == m - k + static_cast<unsigned>(i)) --i;
    if (i < 0) break;
    ++pick[static_cast<unsigned>(i)];
    for (unsigned j = static_cast<unsigned>(i) + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return BigCount(static_cast<unsigned long>(count));
}

BigCount brute_idgen_subset_count(Family f, unsigned n) {
  SingularIdeal s = singular_ideal(f, n);
  const unsigned m = static_cast<unsigned>(s.top_idempotents.size());
  if (m > 22) throw GuardExceeded("brute_idgen_subset_count: more than 22 idempotents");
  std::uint64_t count = 0;
  std::vector<std::uint32_t> gens;
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << m); ++k) {
    std::uint64_t g = k ^ (k >> 1);
    gens.clear();
    for (unsigned i = 0; i < m; ++i)
      if (g >> i & 1) gens.push_back(s.top_idempotents[i]);
    if (s.generates(gens)) ++count;
  }
  return BigCount(static_cast<unsigned long>(count));
}

BigCount brute_strong_tournaments(unsigned n) {
  if (n == 0 || n > 6) throw GuardExceeded("brute_strong_tournaments: need 1 <= n <= 6");
  std::vector<std::pair<unsigned, unsigned>> pairs;
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (unsigned e = 0; e < pairs.size(); ++e) {
      auto [a, b] = pairs[e];
      if (mask >> e & 1) adj[a][b] = 1;
      else adj[b][a] = 1;
    }
    auto reaches_all = [&](bool forward) {
      std::vector<char> seen(n, 0);
      std::vector<unsigned> stack{0};
      seen[0] = 1;
      while (!stack.empty()) {
        unsigned x = stack.back();
        stack.pop_back();
        for (unsigned y = 0; y < n; ++y)
          if (!seen[y] && (forward ? adj[x][y] : adj[y][x])) {
            seen[y] = 1;
            stack.push_back(y);
          }
      }
      return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
    };
    if (reaches_all(true) && reaches_all(false)) ++count;
  }
  return BigCount(static_cast<unsigned long>(count));
}

BigCount brute_standard_fillings(const IntegerPartition& lambda) {
  const unsigned r = lambda.size();
  if (r > 8) throw GuardExceeded("brute_standard_fillings: |lambda| > 8");
  std::vector<std::pair<unsigned, unsigned>> cells;
  for (unsigned i = 0; i < lambda.length(); ++i)
    for (unsigned j = 0; j < lambda.parts()[i]; ++j) cells.emplace_back(i, j);
  std::vector<unsigned> fill(r);
  std::iota(fill.begin(), fill.end(), 1u);
  std::map<std::pair<unsigned, unsigned>, unsigned> at;
  std::uint64_t count = 0;
  do {
    for (unsigned c = 0; c < r; ++c) at[cells[c]] = fill[c];
    bool ok = true;
    for (auto [i, j] : cells) {
      auto right = at.find({i, j + 1});
      auto below = at.find({i + 1, j});
      if ((right != at.end() && right->second < at[{i, j}]) ||
          (below != at.end() && below->second < at[{i, j}])) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  } while (std::next_permutation(fill.begin(), fill.end()));
  return BigCount(static_cast<unsigned long>(count));
}

nlohmann::json to_json(const VerifyRecord& rec) {
  nlohmann::json j;
  j["theorem"] = rec.theorem;
  j["instance"] = rec.instance;
  j["status"] = rec.pass ? "pass" : "fail";
  if (rec.witness) j["witness"] = *rec.witness;
  return j;
}

// ------------------------------------------------------------ theorem checks

namespace {

using Check = std::function<VerifyRecord(unsigned)>;

std::string inst(unsigned n) { return "n=" + std::to_string(n); }

VerifyRecord record(const std::string& id, unsigned n, bool pass,
                    std::optional<std::string> witness = std::nullopt) {
  return VerifyRecord{id, inst(n), pass, pass ? std::nullopt : std::move(witness)};
}

VerifyRecord rank_formula(const std::string& id, Family f, unsigned n) {
  for (const auto& d : green_classes(f, n)) {
    bool valid = false;
    switch (f) {
      case Family::Partition: valid = d.r + 1 <= n; break;
      case Family::Brauer:
      case Family::Jones: valid = d.r + 2 <= n; break;
      default: valid = d.r >= 1 && d.r + 1 <= n; break;
    }
    if (!valid) continue;
    std::uint64_t expected = d.r_class_count;
    if (f == Family::FullTransformation) expected = std::max(d.r_class_count, d.l_class_count);
    BigCount formula = rank_ideal(f, n, d.r);
    if (formula != BigCount(static_cast<unsigned long>(expected)))
      return record(id, n, false,
                    "r=" + std::to_string(d.r) + " formula=" + to_string(formula) +
                        " classes=" + std::to_string(expected));
  }
  return record(id, n, true);
}

std::vector<PartitionDiagram> as_diagrams(const SingularIdeal& s,
                                          const std::vector<std::uint32_t>& idx) {
  std::vector<PartitionDiagram> out;
  for (auto i : idx) out.push_back(s.elements[i]);
  return out;
}

std::string list_text(const std::vector<PartitionDiagram>& xs) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : " ") + x.to_string();
  return s;
}

// Every subset F of the top idempotents: RBR criterion vs closure, plus
// the red-circuit criterion when asked.
VerifyRecord rbr_iff_generates(const std::string& id, Family f, unsigned n, bool red_circuit) {
  SingularIdeal s = singular_ideal(f, n);
  const unsigned m = static_cast<unsigned>(s.top_idempotents.size());
  if (m > 22) throw GuardExceeded(id + ": more than 22 idempotents");
  if (s.top_rank < 0) return record(id, n, true);
  auto g = projection_graph(f, n, static_cast<unsigned>(s.top_rank));
  std::uint64_t generating = 0;
  std::vector<std::uint32_t> gens;
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << m); ++k) {
    std::uint64_t code = k ^ (k >> 1);
    gens.clear();
    for (unsigned i = 0; i < m; ++i)
      if (code >> i & 1) gens.push_back(s.top_idempotents[i]);
    bool closure_ok = s.generates(gens);
    auto F = as_diagrams(s, gens);
    auto coloured = add_red(g, F);
    bool rbr = rbr_generates(coloured).holds;
    bool agree = rbr == closure_ok;
    if (red_circuit) agree = agree && red_circuit_cover(coloured).holds == closure_ok;
    if (!agree) return record(id, n, false, "F = " + list_text(F));
    generating += closure_ok;
  }
  if (red_circuit && n >= 2 && BigCount(static_cast<unsigned long>(generating)) != jones_f(n))
    return record(id, n, false, "generating subsets " + std::to_string(generating));
  return record(id, n, true);
}

VerifyRecord tournament_criterion(const std::string& id, unsigned n) {
  if (n < 3 || n > 5) throw GuardExceeded(id + ": need 3 <= n <= 5");
  auto sing = enumerate_transformations(Family::SingularTransformation, n);
  std::unordered_map<Transformation, std::uint32_t> index;
  for (std::uint32_t i = 0; i < sing.size(); ++i) index.emplace(sing[i], i);
  CayleyTable table(sing);
  std::vector<std::pair<unsigned, unsigned>> pairs;
  for (unsigned a = 1; a <= n; ++a)
    for (unsigned b = a + 1; b <= n; ++b) pairs.emplace_back(a, b);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<Transformation> x;
    std::vector<std::uint32_t> gens;
    for (unsigned e = 0; e < pairs.size(); ++e) {
      auto [a, b] = pairs[e];
      // arc j -> i stands for the idempotent i -> j
      auto t = (mask >> e & 1) ? Transformation::elementary(n, b, a)
                               : Transformation::elementary(n, a, b);
      x.push_back(t);
      gens.push_back(index.at(t));
    }
    bool closure_ok = table.closure_size(gens) == sing.size();
    if (tournament_generates(x) != closure_ok)
      return record(id, n, false, "tournament mask " + std::to_string(mask));
  }
  return record(id, n, true);
}

PartitionDiagram gen(const char* kind, std::vector<unsigned> idx, unsigned n) {
  return generator(kind, idx, n);
}

// Expected nonzero products of projection pairs in the top principal factor.
std::map<std::pair<PartitionDiagram, PartitionDiagram>, PartitionDiagram> lemma_products(
    Family f, unsigned n, std::vector<PartitionDiagram>& projs) {
  std::map<std::pair<PartitionDiagram, PartitionDiagram>, PartitionDiagram> table;
  projs.clear();
  if (f == Family::Partition) {
    for (unsigned i = 1; i <= n; ++i) {
      auto p = gen("pi_i", {i}, n);
      projs.push_back(p);
      table.emplace(std::make_pair(p, p), p);
    }
    for (unsigned i = 1; i <= n; ++i)
      for (unsigned j = i + 1; j <= n; ++j) {
        auto pij = gen("pi_ij", {i, j}, n), pi = gen("pi_i", {i}, n), pj = gen("pi_i", {j}, n);
        projs.push_back(pij);
        table.emplace(std::make_pair(pij, pij), pij);
        table.emplace(std::make_pair(pij, pj), gen("lambda_ij", {i, j}, n));
        table.emplace(std::make_pair(pij, pi), gen("lambda_ij", {j, i}, n));
        table.emplace(std::make_pair(pi, pij), gen("rho_ij", {i, j}, n));
        table.emplace(std::make_pair(pj, pij), gen("rho_ij", {j, i}, n));
      }
  } else if (f == Family::Brauer) {
    for (unsigned i = 1; i <= n; ++i)
      for (unsigned j = i + 1; j <= n; ++j) projs.push_back(gen("tau_ij", {i, j}, n));
    for (unsigned i = 1; i <= n; ++i)
      for (unsigned j = 1; j <= n; ++j)
        for (unsigned k = 1; k <= n; ++k) {
          if (i == j || j == k || i == k) continue;
          table.emplace(std::make_pair(gen("tau_ij", {i, j}, n), gen("tau_ij", {j, k}, n)),
                        gen("sigma_ijk", {i, j, k}, n));
        }
    for (const auto& p : projs) table.emplace(std::make_pair(p, p), p);
  } else if (f == Family::Jones) {
    for (unsigned i = 1; i + 1 <= n; ++i) {
      auto t = gen("tau_i", {i}, n);
      projs.push_back(t);
      table.emplace(std::make_pair(t, t), t);
    }
    for (unsigned i = 1; i + 2 <= n; ++i) {
      auto a = gen("tau_i", {i}, n), b = gen("tau_i", {i + 1}, n);
      table.emplace(std::make_pair(a, b), gen("lambda_i", {i}, n));
      table.emplace(std::make_pair(b, a), gen("rho_i", {i}, n));
    }
  } else {
    throw std::invalid_argument("product table: unsupported family");
  }
  return table;
}

VerifyRecord product_table(const std::string& id, Family f, unsigned n) {
  const unsigned r = static_cast<unsigned>(top_singular_rank(f, n));
  std::vector<PartitionDiagram> named;
  auto expected = lemma_products(f, n, named);
  auto computed = projections(f, n, r);
  std::set<PartitionDiagram> a(named.begin(), named.end()), b(computed.begin(), computed.end());
  if (a != b) return record(id, n, false, "projection sets differ");
  for (const auto& p : computed)
    for (const auto& q : computed) {
      auto pq = principal_factor_product(r, p, q);
      auto it = expected.find({p, q});
      bool ok = it == expected.end() ? !pq.has_value() : (pq && *pq == it->second);
      if (!ok)
        return record(id, n, false,
                      p.to_string() + " * " + q.to_string() + " = " +
                          (pq ? pq->to_string() : std::string("0")));
    }
  return record(id, n, true);
}

VerifyRecord dropdown(const std::string& id, Family f, unsigned n) {
  const unsigned step = f == Family::Partition ? 1 : 2;
  auto all = enumerate_diagrams(f, n);
  // r <= n-2 for partitions, r <= n-4 of the right parity otherwise
  for (unsigned r = 0; r + 2 * step <= n; ++r) {
    if (step == 2 && (n - r) % 2) continue;
    std::vector<PartitionDiagram> upper;
    std::vector<PartitionDiagram> lower;
    for (const auto& a : all) {
      if (rank(a) == r + step) upper.push_back(a);
      if (rank(a) == r && is_projection(a)) lower.push_back(a);
    }
    auto cl = closure(upper);
    std::unordered_set<PartitionDiagram> got(cl.begin(), cl.end());
    for (const auto& p : lower)
      if (!got.count(p)) return record(id, n, false, "r=" + std::to_string(r) + " " + p.to_string());
  }
  return record(id, n, true);
}

VerifyRecord idempotent_count(const std::string& id, unsigned n) {
  std::uint64_t count = 0;
  for (const auto& a : enumerate_diagrams(Family::Partition, n))
    if (rank(a) + 1 == n && is_idempotent(a)) ++count;
  std::uint64_t expected = (5ull * n * n - 3ull * n) / 2;
  return record(id, n, count == expected,
                "counted " + std::to_string(count) + " expected " + std::to_string(expected));
}

VerifyRecord min_idgen_triangle(const std::string& id, Family f, unsigned n) {
  BigCount brute = brute_min_idgen_count(f, n);
  BigCount graph = balanced_subgraph_count(projection_graph(f, n));
  std::optional<BigCount> closed;
  if (f == Family::Partition) closed = partition_gsets(n);
  if (f == Family::Jones) closed = fibonacci(n);
  bool ok = brute == graph && (!closed || *closed == brute);
  return record(id, n, ok,
                "closure=" + to_string(brute) + " balanced=" + to_string(graph) +
                    (closed ? " formula=" + to_string(*closed) : std::string()));
}

VerifyRecord strong_hall_check(const std::string& id, Family f, unsigned n) {
  int top = top_singular_rank(f, n);
  if (top < 0) return record(id, n, true);
  auto d = graham_houghton(f, n, static_cast<unsigned>(top));
  bool a = strong_hall(d);
  bool b = strong_hall_matching(d);
  return record(id, n, a && b, "strong_hall=" + std::to_string(a) + " matching=" + std::to_string(b));
}

VerifyRecord planar_jones(const std::string& id, unsigned n) {
  auto pp = enumerate_diagrams(Family::PlanarPartition, n);
  auto jj = enumerate_diagrams(Family::Jones, 2 * n);
  std::vector<PartitionDiagram> image;
  for (const auto& a : pp) image.push_back(planar_to_jones(a));
  std::vector<PartitionDiagram> sorted = image;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != jj) return record(id, n, false, "image is not J_2n");
  for (std::size_t a = 0; a < pp.size(); ++a)
    for (std::size_t b = 0; b < pp.size(); ++b)
      if (planar_to_jones(multiply(pp[a], pp[b])) != multiply(image[a], image[b]))
        return record(id, n, false, pp[a].to_string() + " * " + pp[b].to_string());
  return record(id, n, true);
}

VerifyRecord bratteli(const std::string& id, unsigned n) {
  for (unsigned m = 0; m <= n; ++m)
    for (const auto& mu : partitions_of(m))
      if (bratteli_paths(n, mu) != dim_partition_algebra(n, mu))
        return record(id, n, false, "mu=" + mu.to_string());
  return record(id, n, true);
}

struct Entry {
  unsigned min_n;
  Check check;
};

const std::map<std::string, Entry>& registry() {
  static const std::map<std::string, Entry> reg = [] {
    std::map<std::string, Entry> m;
    auto add = [&m](const std::string& id, unsigned min_n, std::function<VerifyRecord(const std::string&, unsigned)> fn) {
      m.emplace(id, Entry{min_n, [id, fn](unsigned n) { return fn(id, n); }});
    };
    const std::pair<const char*, Family> fams[] = {
        {"partition", Family::Partition}, {"brauer", Family::Brauer}, {"jones", Family::Jones}};
    for (auto [name, f] : fams) {
      std::string s = name;
      unsigned lo = f == Family::Partition ? 2 : 3;
      add("rank_formula_" + s, 2, [f](const std::string& id, unsigned n) { return rank_formula(id, f, n); });
      add("rbr_iff_generates_" + s, lo,
          [f](const std::string& id, unsigned n) { return rbr_iff_generates(id, f, n, false); });
      add("product_table_" + s, lo, [f](const std::string& id, unsigned n) { return product_table(id, f, n); });
      add("dropdown_" + s, 2, [f](const std::string& id, unsigned n) { return dropdown(id, f, n); });
      add("min_idgen_triangle_" + s, 2,
          [f](const std::string& id, unsigned n) { return min_idgen_triangle(id, f, n); });
      add("strong_hall_" + s, 2, [f](const std::string& id, unsigned n) { return strong_hall_check(id, f, n); });
    }
    add("rank_formula_transformation", 2, [](const std::string& id, unsigned n) {
      return rank_formula(id, Family::FullTransformation, n);
    });
    add("jones_red_circuit_equivalence", 2,
        [](const std::string& id, unsigned n) { return rbr_iff_generates(id, Family::Jones, n, true); });
    add("tournament_criterion", 3, tournament_criterion);
    add("strong_tournaments", 1, [](const std::string& id, unsigned n) {
      BigCount a = brute_strong_tournaments(n), b = strong_tournaments_w(n);
      return record(id, n, a == b, "brute=" + to_string(a) + " formula=" + to_string(b));
    });
    add("idempotent_count_jnm1", 2, idempotent_count);
    add("planar_jones_isomorphism", 1, planar_jones);
    add("bratteli_dims", 0, bratteli);
    return m;
  }();
  return reg;
}

}  // namespace

std::vector<std::string> theorem_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, e] : registry()) ids.push_back(id);
  return ids;
}

std::vector<VerifyRecord> verify_theorem(const std::string& id, unsigned lo, unsigned hi) {
  auto it = registry().find(id);
  if (it == registry().end()) throw std::invalid_argument("unknown theorem id: " + id);
  if (lo > hi) throw std::invalid_argument("empty range");
  std::vector<VerifyRecord> out;
  for (unsigned n = std::max(lo, it->second.min_n); n <= hi; ++n) out.push_back(it->second.check(n));
  return out;
}

}  // namespace diagmon
