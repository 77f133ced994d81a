#include "diagmon/graphs.hpp"

#include <algorithm>
#include <bit>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>
#include <boost/graph/strong_components.hpp>
#include <cmath>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "diagmon/semigroup.hpp"

namespace diagmon {

namespace {

std::string join_indices(const std::vector<unsigned>& idx, unsigned n) {
  std::string s;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k && n >= 10) s += '_';
    s += std::to_string(idx[k]);
  }
  return s;
}

// Index tuple naming a projection of the top singular class, if it has one.
std::optional<std::vector<unsigned>> projection_indices(Family f, unsigned n, unsigned r,
                                                        const PartitionDiagram& p) {
  auto sig = signature(p);
  std::vector<std::vector<unsigned>> pairs;
  for (auto& c : sig.ker.classes())
    if (c.size() == 2) pairs.push_back(c);
  switch (f) {
    case Family::Partition:
    case Family::PlanarPartition:
      if (r + 1 != n) return std::nullopt;
      if (pairs.size() == 1) return pairs[0];
      for (unsigned k = 1; k <= n; ++k)
        if (!std::binary_search(sig.dom.begin(), sig.dom.end(), k)) return std::vector<unsigned>{k};
      return std::nullopt;
    case Family::Brauer:
      if (r + 2 != n || pairs.size() != 1) return std::nullopt;
      return pairs[0];
    case Family::Jones:
      if (r + 2 != n || pairs.size() != 1) return std::nullopt;
      return std::vector<unsigned>{pairs[0][0]};
    default:
      return std::nullopt;
  }
}

void set_partitions_of(unsigned n, std::vector<std::vector<unsigned>>& out) {
  std::vector<unsigned> lab(n, 0);
  auto rec = [&](auto&& self, unsigned p, unsigned blocks) -> void {
    if (p == n) {
      out.push_back(lab);
      return;
    }
    for (unsigned b = 0; b <= blocks; ++b) {
      lab[p] = b;
      self(self, p + 1, b == blocks ? blocks + 1 : blocks);
    }
  };
  rec(rec, 0, 0);
}

}  // namespace

std::optional<unsigned> TwoColouredDiGraph::vertex(const std::string& label) const {
  for (unsigned v = 0; v < labels.size(); ++v)
    if (labels[v] == label) return v;
  return std::nullopt;
}

Matrix01 TwoColouredDiGraph::blue_matrix() const {
  Matrix01 m(size(), std::vector<std::uint8_t>(size(), 0));
  for (auto [p, q] : blue) m[p][q] = 1;
  return m;
}

std::size_t BipartiteGraph::edge_count() const {
  std::size_t e = 0;
  for (const auto& row : adj) e += row.size();
  return e;
}

std::string projection_label(Family f, unsigned n, unsigned r, const PartitionDiagram& p) {
  if (auto idx = projection_indices(f, n, r, p)) return join_indices(*idx, n);
  return p.to_string();
}

std::vector<PartitionDiagram> projections(Family f, unsigned n, unsigned r) {
  if (!is_diagram_family(f)) throw std::invalid_argument("projections: not a diagram family");
  if (n > kMaxDegree) throw std::invalid_argument("projections: degree too large");
  std::vector<PartitionDiagram> found;
  std::vector<unsigned> lab(2 * n);

  if (f == Family::Partition || f == Family::PlanarPartition) {
    std::vector<std::vector<unsigned>> parts;
    set_partitions_of(n, parts);
    for (const auto& ker : parts) {
      unsigned c = ker.empty() ? 0 : *std::max_element(ker.begin(), ker.end()) + 1;
      if (r > c) continue;
      // choose the r transversal classes
      std::vector<bool> pick(c, false);
      std::fill(pick.end() - r, pick.end(), true);
      do {
        for (unsigned k = 0; k < n; ++k) {
          lab[k] = ker[k];
          lab[n + k] = pick[ker[k]] ? ker[k] : c + ker[k];
        }
        auto p = PartitionDiagram::from_labels(n, lab.data());
        if (f == Family::Partition || is_planar(p)) found.push_back(p);
      } while (std::next_permutation(pick.begin(), pick.end()));
    }
  } else {
    if (r > n || (n - r) % 2) return {};
    unsigned pairs = (n - r) / 2;
    std::vector<unsigned> mate(n, ~0u);
    auto rec = [&](auto&& self, unsigned from, unsigned left) -> void {
      if (left == 0) {
        for (unsigned k = 0; k < n; ++k) {
          unsigned b = mate[k] == ~0u ? k : std::min(k, mate[k]);
          lab[k] = b;
          lab[n + k] = mate[k] == ~0u ? b : n + b;
        }
        auto p = PartitionDiagram::from_labels(n, lab.data());
        if (f == Family::Brauer || is_planar(p)) found.push_back(p);
        return;
      }
      for (unsigned i = from; i < n; ++i) {
        if (mate[i] != ~0u) continue;
        for (unsigned j = i + 1; j < n; ++j) {
          if (mate[j] != ~0u) continue;
          mate[i] = j;
          mate[j] = i;
          self(self, i + 1, left - 1);
          mate[i] = mate[j] = ~0u;
        }
      }
    };
    rec(rec, 0, pairs);
  }

  std::vector<std::pair<std::vector<unsigned>, PartitionDiagram>> keyed;
  bool named = true;
  for (const auto& p : found) {
    auto idx = projection_indices(f, n, r, p);
    if (!idx) named = false;
    keyed.emplace_back(idx.value_or(std::vector<unsigned>{}), p);
  }
  if (named)
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first < b.first : a.second < b.second;
    });
  else
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
  std::vector<PartitionDiagram> out;
  for (auto& [k, p] : keyed) out.push_back(p);
  return out;
}

TwoColouredDiGraph projection_graph(Family f, unsigned n, unsigned r) {
  TwoColouredDiGraph g;
  g.family = f;
  g.n = n;
  g.r = r;
  g.projections = projections(f, n, r);
  for (const auto& p : g.projections) g.labels.push_back(projection_label(f, n, r, p));
  for (unsigned a = 0; a < g.size(); ++a)
    for (unsigned b = 0; b < g.size(); ++b)
      if (rank(multiply(g.projections[a], g.projections[b])) == r) g.blue.emplace(a, b);
  return g;
}

TwoColouredDiGraph projection_graph(Family f, unsigned n) {
  int r = top_singular_rank(f, n);
  if (r < 0) {
    TwoColouredDiGraph g;
    g.family = f;
    g.n = n;
    return g;
  }
  return projection_graph(f, n, static_cast<unsigned>(r));
}

BipartiteGraph graham_houghton(Family f, unsigned n, unsigned r) {
  auto proj = projections(f, n, r);
  std::map<std::vector<unsigned>, unsigned> rindex, lindex;
  BipartiteGraph d;
  for (unsigned i = 0; i < proj.size(); ++i) {
    rindex[r_class_key(f, proj[i])] = i;
    lindex[l_class_key(f, proj[i])] = i;
    d.left.push_back(projection_label(f, n, r, proj[i]));
  }
  d.right = d.left;
  d.adj.assign(proj.size(), {});
  for (const auto& e : enumerate_diagrams(f, n)) {
    if (rank(e) != r || !is_idempotent(e)) continue;
    unsigned a = rindex.at(r_class_key(f, e));
    unsigned b = lindex.at(l_class_key(f, e));
    d.adj[a].push_back(b);
  }
  for (auto& row : d.adj) std::sort(row.begin(), row.end());
  return d;
}

RedArc decode_idempotent(const TwoColouredDiGraph& g, const PartitionDiagram& f) {
  if (f.degree() != g.n || rank(f) != g.r || !is_idempotent(f))
    throw std::invalid_argument("not an idempotent of the J-class: " + f.to_string());
  PartitionDiagram fs = star(f);
  PartitionDiagram p = multiply(f, fs), q = multiply(fs, f);
  auto find = [&](const PartitionDiagram& x) -> unsigned {
    for (unsigned v = 0; v < g.projections.size(); ++v)
      if (g.projections[v] == x) return v;
    throw std::invalid_argument("projection missing from graph: " + x.to_string());
  };
  RedArc arc{find(p), find(q)};
  if (multiply(p, q) != f) throw std::logic_error("idempotent is not pq");
  return arc;
}

TwoColouredDiGraph add_red(const TwoColouredDiGraph& g, const std::vector<PartitionDiagram>& F) {
  TwoColouredDiGraph out = g;
  out.red.clear();
  for (const auto& f : F) {
    auto arc = decode_idempotent(g, f);
    out.red.emplace(arc.from, arc.to);
  }
  return out;
}

// ------------------------------------------------------------ circuits

namespace {

std::vector<std::vector<unsigned>> out_lists(unsigned n, const std::set<Arc>& arcs) {
  std::vector<std::vector<unsigned>> adj(n);
  for (auto [p, q] : arcs) adj[p].push_back(q);
  return adj;
}

}  // namespace

CircuitVerdict rbr_generates(const TwoColouredDiGraph& g) {
  const unsigned n = g.size();
  auto red = out_lists(n, g.red), blue = out_lists(n, g.blue);
  CircuitVerdict v;
  v.witnesses.resize(n);
  // State 2x: at x, next arc red. State 2x+1: at x, next arc blue.
  for (unsigned base = 0; base < n; ++base) {
    std::vector<int> parent(2 * n, -1);
    std::vector<char> seen(2 * n, 0);
    std::deque<unsigned> queue{2 * base};
    seen[2 * base] = 1;
    int closing = -1;
    while (!queue.empty() && closing < 0) {
      unsigned s = queue.front();
      queue.pop_front();
      unsigned x = s / 2;
      if (s % 2 == 0) {
        for (unsigned y : red[x]) {
          if (y == base) {
            closing = static_cast<int>(s);
            break;
          }
          unsigned t = 2 * y + 1;
          if (!seen[t]) {
            seen[t] = 1;
            parent[t] = static_cast<int>(s);
            queue.push_back(t);
          }
        }
      } else {
        for (unsigned y : blue[x]) {
          unsigned t = 2 * y;
          if (!seen[t]) {
            seen[t] = 1;
            parent[t] = static_cast<int>(s);
            queue.push_back(t);
          }
        }
      }
    }
    if (closing < 0) {
      v.holds = false;
      v.failing.push_back(base);
      continue;
    }
    std::vector<unsigned> walk{base};
    for (int s = closing; s >= 0; s = parent[s]) walk.push_back(static_cast<unsigned>(s) / 2);
    std::reverse(walk.begin(), walk.end());
    v.witnesses[base] = walk;
  }
  return v;
}

CircuitVerdict red_circuit_cover(const TwoColouredDiGraph& g) {
  using G = boost::adjacency_list<boost::vecS, boost::vecS, boost::directedS>;
  const unsigned n = g.size();
  G bg(n);
  for (auto [p, q] : g.red) boost::add_edge(p, q, bg);
  std::vector<int> comp(n);
  int ncomp = n ? boost::strong_components(bg, comp.data()) : 0;
  std::vector<unsigned> comp_size(static_cast<std::size_t>(ncomp), 0);
  for (unsigned x = 0; x < n; ++x) ++comp_size[static_cast<std::size_t>(comp[x])];

  auto red = out_lists(n, g.red);
  CircuitVerdict v;
  v.witnesses.resize(n);
  for (unsigned x = 0; x < n; ++x) {
    bool loop = g.red.count({x, x}) > 0;
    if (!loop && comp_size[static_cast<std::size_t>(comp[x])] < 2) {
      v.holds = false;
      v.failing.push_back(x);
      continue;
    }
    if (loop) {
      v.witnesses[x] = {x, x};
      continue;
    }
    // shortest red cycle through x
    std::vector<int> parent(n, -1);
    std::deque<unsigned> queue{x};
    std::vector<char> seen(n, 0);
    seen[x] = 1;
    int last = -1;
    while (!queue.empty() && last < 0) {
      unsigned y = queue.front();
      queue.pop_front();
      for (unsigned z : red[y]) {
        if (z == x) {
          last = static_cast<int>(y);
          break;
        }
        if (!seen[z]) {
          seen[z] = 1;
          parent[z] = static_cast<int>(y);
          queue.push_back(z);
        }
      }
    }
    std::vector<unsigned> walk{x};
    for (int y = last; y >= 0; y = parent[static_cast<unsigned>(y)]) walk.push_back(static_cast<unsigned>(y));
    std::reverse(walk.begin(), walk.end());
    v.witnesses[x] = walk;
  }
  return v;
}

CircuitVerdict red_in_out(const TwoColouredDiGraph& g) {
  const unsigned n = g.size();
  std::vector<char> in(n, 0), out(n, 0);
  for (auto [p, q] : g.red) {
    out[p] = 1;
    in[q] = 1;
  }
  CircuitVerdict v;
  v.witnesses.resize(n);
  for (unsigned x = 0; x < n; ++x)
    if (!in[x] || !out[x]) {
      v.holds = false;
      v.failing.push_back(x);
    }
  return v;
}

// ------------------------------------------------------------ permanents

namespace {

void check_square(const Matrix01& a) {
  for (const auto& row : a)
    if (row.size() != a.size()) throw std::invalid_argument("permanent: matrix is not square");
}

BigCount from_i128(__int128 x) {
  bool neg = x < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-x) : static_cast<unsigned __int128>(x);
  BigCount hi = static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64));
  BigCount lo = static_cast<unsigned long>(static_cast<std::uint64_t>(u));
  BigCount out = (hi << 64) + lo;
  return neg ? BigCount(-out) : out;
}

BigCount ryser(const Matrix01& a) {
  const unsigned n = static_cast<unsigned>(a.size());
  if (n == 0) return 1;
  if (n > 30) throw std::invalid_argument("ryser: matrix too large");
  double bits = n;
  for (const auto& row : a) {
    unsigned deg = static_cast<unsigned>(std::count(row.begin(), row.end(), 1));
    if (deg == 0) return 0;
    bits += std::log2(static_cast<double>(deg));
  }
  // Gray-code walk over column subsets, keeping row sums current.
  std::vector<int> rowsum(n, 0);
  const std::uint64_t total = std::uint64_t{1} << n;
  if (bits < 124) {
    __int128 acc = 0;
    std::uint64_t gray = 0;
    for (std::uint64_t k = 1; k < total; ++k) {
      unsigned col = static_cast<unsigned>(std::countr_zero(k));
      std::uint64_t bit = std::uint64_t{1} << col;
      int sign = (gray & bit) ? -1 : 1;
      gray ^= bit;
      __int128 prod = 1;
      for (unsigned i = 0; i < n; ++i) {
        rowsum[i] += sign * a[i][col];
        prod *= rowsum[i];
      }
      if (std::popcount(gray) % 2) acc -= prod;
      else acc += prod;
    }
    return from_i128(n % 2 ? -acc : acc);
  }
  BigCount acc = 0;
  std::uint64_t gray = 0;
  for (std::uint64_t k = 1; k < total; ++k) {
    unsigned col = static_cast<unsigned>(std::countr_zero(k));
    std::uint64_t bit = std::uint64_t{1} << col;
    int sign = (gray & bit) ? -1 : 1;
    gray ^= bit;
    BigCount prod = 1;
    bool zero = false;
    for (unsigned i = 0; i < n; ++i) {
      rowsum[i] += sign * a[i][col];
      if (rowsum[i] == 0) zero = true;
    }
    if (zero) continue;
    for (unsigned i = 0; i < n; ++i) prod *= rowsum[i];
    if (std::popcount(gray) % 2) acc -= prod;
    else acc += prod;
  }
  return n % 2 ? BigCount(-acc) : acc;
}

// Row-by-row expansion memoized on the set of used columns.
BigCount sparse_permanent(const Matrix01& a) {
  const unsigned n = static_cast<unsigned>(a.size());
  if (n == 0) return 1;
  if (n > 64) throw std::invalid_argument("sparse permanent: matrix too large");
  std::vector<std::vector<unsigned>> cols(n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      if (a[i][j]) cols[i].push_back(j);
  std::unordered_map<std::uint64_t, BigCount> memo;
  auto rec = [&](auto&& self, unsigned row, std::uint64_t used) -> BigCount {
    if (row == n) return 1;
    auto it = memo.find(used);
    if (it != memo.end()) return it->second;
    BigCount sum = 0;
    for (unsigned j : cols[row]) {
      std::uint64_t bit = std::uint64_t{1} << j;
      if (!(used & bit)) sum += self(self, row + 1, used | bit);
    }
    memo.emplace(used, sum);
    return sum;
  };
  return rec(rec, 0, 0);
}

}  // namespace

BigCount permanent(const Matrix01& a, PermanentMethod method) {
  check_square(a);
  switch (method) {
    case PermanentMethod::Ryser: return ryser(a);
    case PermanentMethod::Sparse: return sparse_permanent(a);
    case PermanentMethod::Auto: break;
  }
  return a.size() <= 24 ? ryser(a) : sparse_permanent(a);
}

BigCount balanced_subgraph_count(const TwoColouredDiGraph& g) { return permanent(g.blue_matrix()); }

std::vector<std::vector<unsigned>> balanced_subgraphs(const TwoColouredDiGraph& g,
                                                      std::size_t limit) {
  const unsigned n = g.size();
  auto succ = out_lists(n, g.blue);
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> pick(n);
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, unsigned row) -> void {
    if (row == n) {
      if (out.size() >= limit) throw std::length_error("balanced_subgraphs: limit reached");
      out.push_back(pick);
      return;
    }
    for (unsigned j : succ[row]) {
      if (used[j]) continue;
      used[j] = 1;
      pick[row] = j;
      self(self, row + 1);
      used[j] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

// ------------------------------------------------------------ strong Hall

namespace {

void check_balanced(const BipartiteGraph& d) {
  if (d.left.size() != d.right.size())
    throw std::invalid_argument("strong_hall: sides have different sizes");
}

}  // namespace

bool strong_hall_exhaustive(const BipartiteGraph& d) {
  check_balanced(d);
  const std::size_t m = d.left.size();
  if (m > 24) throw std::invalid_argument("strong_hall_exhaustive: too many vertices");
  std::vector<std::uint64_t> nb(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (unsigned j : d.adj[i]) nb[i] |= std::uint64_t{1} << j;
  const std::uint64_t full = (std::uint64_t{1} << m) - 1;
  for (std::uint64_t a = 1; a < full; ++a) {
    std::uint64_t hood = 0;
    for (std::uint64_t rest = a; rest; rest &= rest - 1) hood |= nb[std::countr_zero(rest)];
    if (std::popcount(hood) <= std::popcount(a)) return false;
  }
  return true;
}

// |N(A)| > |A| for all proper nonempty A iff G - x - y has a perfect
// matching for every left x and right y.
bool strong_hall_matching(const BipartiteGraph& d) {
  check_balanced(d);
  using G = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  const unsigned m = static_cast<unsigned>(d.left.size());
  if (m <= 1) return true;
  for (unsigned x = 0; x < m; ++x)
    for (unsigned y = 0; y < m; ++y) {
      G bg(2 * m);
      for (unsigned i = 0; i < m; ++i) {
        if (i == x) continue;
        for (unsigned j : d.adj[i])
          if (j != y) boost::add_edge(i, m + j, bg);
      }
      std::vector<boost::graph_traits<G>::vertex_descriptor> mate(2 * m);
      boost::edmonds_maximum_cardinality_matching(bg, mate.data());
      if (boost::matching_size(bg, mate.data()) != m - 1) return false;
    }
  return true;
}

bool strong_hall(const BipartiteGraph& d) {
  return d.left.size() <= 20 ? strong_hall_exhaustive(d) : strong_hall_matching(d);
}

// ------------------------------------------------------------ tournaments

bool tournament_generates(const std::vector<Transformation>& x) {
  if (x.empty()) return false;
  const unsigned n = x.front().degree();
  if (n < 3) throw std::invalid_argument("tournament_generates: need n >= 3");
  std::set<Arc> arcs;
  for (const auto& t : x) {
    if (t.degree() != n || !t.is_idempotent() || t.rank() != n - 1)
      throw std::invalid_argument("tournament_generates: not a rank n-1 idempotent: " + t.to_string());
    for (unsigned i = 1; i <= n; ++i)
      if (t[i] != i) arcs.emplace(t[i] - 1, i - 1);  // (i -> j) gives the arc j -> i
  }
  if (arcs.size() != x.size()) return false;
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = a + 1; b < n; ++b)
      if (arcs.count({a, b}) + arcs.count({b, a}) != 1) return false;
  using G = boost::adjacency_list<boost::vecS, boost::vecS, boost::directedS>;
  G bg(n);
  for (auto [p, q] : arcs) boost::add_edge(p, q, bg);
  std::vector<int> comp(n);
  return boost::strong_components(bg, comp.data()) == 1;
}

// ------------------------------------------------------------ Johnson

UndirectedGraph johnson_graph(unsigned n) {
  if (n < 2) throw std::invalid_argument("johnson_graph: need n >= 2");
  UndirectedGraph g;
  std::vector<std::pair<unsigned, unsigned>> sets;
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = i + 1; j <= n; ++j) {
      sets.emplace_back(i, j);
      g.labels.push_back(join_indices({i, j}, n));
    }
  for (unsigned a = 0; a < sets.size(); ++a)
    for (unsigned b = a + 1; b < sets.size(); ++b) {
      auto [i, j] = sets[a];
      auto [k, l] = sets[b];
      unsigned common = (i == k) + (i == l) + (j == k) + (j == l);
      if (common == 1) g.edges.emplace(a, b);
    }
  return g;
}

UndirectedGraph underlying_simple_graph(const TwoColouredDiGraph& g) {
  UndirectedGraph u;
  u.labels = g.labels;
  for (auto [p, q] : g.blue)
    if (p != q) u.edges.emplace(std::min(p, q), std::max(p, q));
  return u;
}

bool johnson_iso_check(unsigned n) {
  auto lam = projection_graph(Family::Brauer, n);
  auto jg = johnson_graph(n);
  // Send each tau_ij to the 2-set read off its kernel.
  std::map<std::pair<unsigned, unsigned>, unsigned> jindex;
  unsigned v = 0;
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = i + 1; j <= n; ++j) jindex[{i, j}] = v++;
  std::vector<unsigned> phi(lam.size());
  std::set<unsigned> image;
  for (unsigned x = 0; x < lam.size(); ++x) {
    std::vector<unsigned> pair;
    for (auto& c : signature(lam.projections[x]).ker.classes())
      if (c.size() == 2) pair = c;
    if (pair.size() != 2) return false;
    phi[x] = jindex.at({pair[0], pair[1]});
    image.insert(phi[x]);
  }
  if (image.size() != jg.labels.size()) return false;
  std::set<Arc> mapped;
  for (auto [p, q] : underlying_simple_graph(lam).edges)
    mapped.emplace(std::min(phi[p], phi[q]), std::max(phi[p], phi[q]));
  return mapped == jg.edges;
}

// ------------------------------------------------------------ export

std::string to_dot(const TwoColouredDiGraph& g) {
  std::ostringstream os;
  os << "digraph G {\n";
  for (unsigned v = 0; v < g.size(); ++v) os << "  v" << v << " [label=\"" << g.labels[v] << "\"];\n";
  for (auto [p, q] : g.blue) os << "  v" << p << " -> v" << q << " [color=blue];\n";
  for (auto [p, q] : g.red) os << "  v" << p << " -> v" << q << " [color=red];\n";
  os << "}\n";
  return os.str();
}

nlohmann::json to_json(const TwoColouredDiGraph& g) {
  nlohmann::json j;
  j["vertices"] = g.labels;
  j["blue"] = nlohmann::json::array();
  j["red"] = nlohmann::json::array();
  for (auto [p, q] : g.blue) j["blue"].push_back({p, q});
  for (auto [p, q] : g.red) j["red"].push_back({p, q});
  return j;
}

nlohmann::json to_json(const BipartiteGraph& g) {
  nlohmann::json j;
  j["left"] = g.left;
  j["right"] = g.right;
  j["edges"] = nlohmann::json::array();
  for (unsigned i = 0; i < g.adj.size(); ++i)
    for (unsigned k : g.adj[i]) j["edges"].push_back({i, k});
  return j;
}

nlohmann::json to_json(const UndirectedGraph& g) {
  nlohmann::json j;
  j["vertices"] = g.labels;
  j["edges"] = nlohmann::json::array();
  for (auto [p, q] : g.edges) j["edges"].push_back({p, q});
  return j;
}

}  // namespace diagmon
