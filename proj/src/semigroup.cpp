#include "diagmon/semigroup.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace diagmon {

namespace {

void guard(Family f, unsigned n) {
  if (n > kMaxDegree) throw GuardExceeded("degree too large");
  BigCount size = family_size(f, n);
  if (size > BigCount(static_cast<unsigned long>(kEnumerationGuard)))
    throw GuardExceeded("enumeration of " + std::string(family_name(f)) + " " + std::to_string(n) +
                        " needs " + size.get_str() + " elements, guard is " +
                        std::to_string(kEnumerationGuard));
}

// Restricted growth strings over the 2n positions.
void all_set_partitions(unsigned n, std::vector<PartitionDiagram>& out) {
  const unsigned m = 2 * n;
  std::vector<unsigned> lab(m, 0);
  auto rec = [&](auto&& self, unsigned p, unsigned blocks) -> void {
    if (p == m) {
      out.push_back(PartitionDiagram::from_labels(n, lab.data()));
      return;
    }
    for (unsigned b = 0; b <= blocks; ++b) {
      lab[p] = b;
      self(self, p + 1, b == blocks ? blocks + 1 : blocks);
    }
  };
  if (m == 0) {
    out.push_back(PartitionDiagram::identity(0));
    return;
  }
  lab[0] = 0;
  rec(rec, 1, 1);
}

void all_perfect_matchings(unsigned n, std::vector<PartitionDiagram>& out) {
  const unsigned m = 2 * n;
  std::vector<unsigned> lab(m, ~0u);
  auto rec = [&](auto&& self, unsigned next_label) -> void {
    unsigned p = 0;
    while (p < m && lab[p] != ~0u) ++p;
    if (p == m) {
      out.push_back(PartitionDiagram::from_labels(n, lab.data()));
      return;
    }
    lab[p] = next_label;
    for (unsigned q = p + 1; q < m; ++q) {
      if (lab[q] != ~0u) continue;
      lab[q] = next_label;
      self(self, next_label + 1);
      lab[q] = ~0u;
    }
    lab[p] = ~0u;
  };
  rec(rec, 0);
}

// Boundary cycle position c to storage position.
unsigned cycle_to_position(unsigned c, unsigned n) { return c < n ? c : 3 * n - c - 1; }

void all_noncrossing_matchings(unsigned n, std::vector<PartitionDiagram>& out) {
  const unsigned m = 2 * n;
  std::vector<unsigned> lab(m, 0);
  std::vector<unsigned> stack;
  auto rec = [&](auto&& self, unsigned c, unsigned opened) -> void {
    if (c == m) {
      out.push_back(PartitionDiagram::from_labels(n, lab.data()));
      return;
    }
    if (opened < n) {
      lab[cycle_to_position(c, n)] = opened;
      stack.push_back(opened);
      self(self, c + 1, opened + 1);
      stack.pop_back();
    }
    if (!stack.empty()) {
      unsigned b = stack.back();
      stack.pop_back();
      lab[cycle_to_position(c, n)] = b;
      self(self, c + 1, opened);
      stack.push_back(b);
    }
  };
  rec(rec, 0, 0);
}

// Noncrossing set partitions of the boundary cycle. A point joins an open
// block only from the top of the stack; blocks above it close for good.
void all_noncrossing_partitions(unsigned n, std::vector<PartitionDiagram>& out) {
  const unsigned m = 2 * n;
  std::vector<unsigned> lab(m, 0);
  auto rec = [&](auto&& self, unsigned c, unsigned blocks, std::vector<unsigned>& stack) -> void {
    if (c == m) {
      out.push_back(PartitionDiagram::from_labels(n, lab.data()));
      return;
    }
    for (std::size_t depth = 0; depth < stack.size(); ++depth) {
      std::vector<unsigned> rest(stack.begin(), stack.begin() + static_cast<long>(depth) + 1);
      lab[cycle_to_position(c, n)] = stack[depth];
      self(self, c + 1, blocks, rest);
    }
    lab[cycle_to_position(c, n)] = blocks;
    stack.push_back(blocks);
    self(self, c + 1, blocks + 1, stack);
    stack.pop_back();
  };
  std::vector<unsigned> stack;
  if (m == 0) {
    out.push_back(PartitionDiagram::identity(0));
    return;
  }
  rec(rec, 0, 0, stack);
}

template <class T>
bool same_set(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) return false;
  std::unordered_set<T> s(a.begin(), a.end());
  if (s.size() != a.size()) return false;
  for (const auto& x : b)
    if (!s.count(x)) return false;
  return true;
}

}  // namespace

std::vector<PartitionDiagram> enumerate_diagrams(Family f, unsigned n) {
  if (!is_diagram_family(f)) throw std::invalid_argument("not a diagram family");
  guard(f, n);
  std::vector<PartitionDiagram> out;
  switch (f) {
    case Family::Partition: all_set_partitions(n, out); break;
    case Family::Brauer: all_perfect_matchings(n, out); break;
    case Family::Jones: all_noncrossing_matchings(n, out); break;
    case Family::PlanarPartition: all_noncrossing_partitions(n, out); break;
    default: break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Transformation> enumerate_transformations(Family f, unsigned n) {
  if (is_diagram_family(f)) throw std::invalid_argument("not a transformation family");
  guard(Family::FullTransformation, n);
  std::vector<Transformation> out;
  std::vector<unsigned> img(n, 1);
  for (;;) {
    Transformation t(img);
    if (f == Family::FullTransformation || t.rank() < n) out.push_back(std::move(t));
    unsigned x = 0;
    while (x < n && img[x] == n) img[x++] = 1;
    if (x == n) break;
    ++img[x];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<unsigned> r_class_key(Family f, const PartitionDiagram& a) {
  const unsigned n = a.degree();
  std::vector<bool> bottom(a.block_count());
  for (unsigned k = 0; k < n; ++k) bottom[a.label(n + k)] = true;
  SetPartition ker(std::vector<unsigned>([&] {
    std::vector<unsigned> v(n);
    for (unsigned k = 0; k < n; ++k) v[k] = a.label(k);
    return v;
  }()));
  std::vector<unsigned> key(n);
  bool with_dom = f == Family::Partition || f == Family::PlanarPartition;
  for (unsigned k = 0; k < n; ++k)
    key[k] = with_dom ? 2 * ker.class_of(k) + (bottom[a.label(k)] ? 1 : 0) : ker.class_of(k);
  return key;
}

std::vector<unsigned> l_class_key(Family f, const PartitionDiagram& a) {
  return r_class_key(f, star(a));
}

std::vector<unsigned> r_class_key(const Transformation& t) { return t.kernel().class_ids(); }
std::vector<unsigned> l_class_key(const Transformation& t) { return t.image(); }

namespace {

template <class T, class RKey, class LKey>
std::vector<JClassDescriptor> classes_of(Family f, unsigned n, const std::vector<T>& elements,
                                         RKey rkey, LKey lkey) {
  struct Acc {
    std::set<std::vector<unsigned>> r, l;
    std::uint64_t size = 0;
  };
  std::map<unsigned, Acc> by_rank;
  for (const auto& e : elements) {
    auto& acc = by_rank[element_rank(e)];
    acc.r.insert(rkey(e));
    acc.l.insert(lkey(e));
    ++acc.size;
  }
  std::vector<JClassDescriptor> out;
  for (const auto& [r, acc] : by_rank) {
    JClassDescriptor d;
    d.family = f;
    d.n = n;
    d.r = r;
    d.r_class_count = acc.r.size();
    d.l_class_count = acc.l.size();
    d.size = acc.size;
    d.h_size = acc.size / (d.r_class_count * d.l_class_count);
    if (d.h_size * d.r_class_count * d.l_class_count != acc.size)
      throw std::logic_error("J-class size is not R x L x H");
    d.is_group = d.r_class_count == 1 && d.l_class_count == 1;
    out.push_back(d);
  }
  return out;
}

}  // namespace

std::vector<JClassDescriptor> green_classes(Family f, unsigned n) {
  if (is_diagram_family(f)) {
    auto all = enumerate_diagrams(f, n);
    return classes_of(
        f, n, all, [f](const PartitionDiagram& a) { return r_class_key(f, a); },
        [f](const PartitionDiagram& a) { return l_class_key(f, a); });
  }
  auto all = enumerate_transformations(f, n);
  return classes_of(
      f, n, all, [](const Transformation& t) { return r_class_key(t); },
      [](const Transformation& t) { return l_class_key(t); });
}

std::string jclass_csv(const std::vector<JClassDescriptor>& classes) {
  std::ostringstream os;
  os << "family,n,r,r_classes,l_classes,h_size\n";
  for (const auto& d : classes)
    os << family_name(d.family) << ',' << d.n << ',' << d.r << ',' << d.r_class_count << ','
       << d.l_class_count << ',' << d.h_size << '\n';
  return os.str();
}

std::vector<PartitionDiagram> ideal_elements(Family f, unsigned n, unsigned r) {
  if (r > n) throw std::invalid_argument("ideal_elements: r > n");
  auto all = enumerate_diagrams(f, n);
  std::vector<PartitionDiagram> out;
  for (auto& a : all)
    if (rank(a) <= r) out.push_back(std::move(a));
  return out;
}

std::vector<Transformation> ideal_transformations(unsigned n, unsigned r) {
  auto all = enumerate_transformations(Family::FullTransformation, n);
  std::vector<Transformation> out;
  for (auto& t : all)
    if (t.rank() <= r) out.push_back(std::move(t));
  return out;
}

std::vector<PartitionDiagram> singular_part(Family f, unsigned n) {
  if (n == 0) return {};
  return ideal_elements(f, n, n - 1);
}

std::optional<PartitionDiagram> principal_factor_product(unsigned r, const PartitionDiagram& a,
                                                         const PartitionDiagram& b) {
  if (rank(a) != r || rank(b) != r)
    throw std::invalid_argument("principal_factor_product: operand outside the J-class");
  PartitionDiagram ab = multiply(a, b);
  if (rank(ab) != r) return std::nullopt;
  return ab;
}

std::vector<PartitionDiagram> closure(const std::vector<PartitionDiagram>& gens) {
  return closure(gens, [](const PartitionDiagram& a, const PartitionDiagram& b) {
    return multiply(a, b);
  });
}

std::vector<Transformation> closure(const std::vector<Transformation>& gens) {
  return closure(gens, [](const Transformation& a, const Transformation& b) { return a * b; });
}

PrincipalClosure principal_closure(unsigned r, const std::vector<PartitionDiagram>& gens) {
  PrincipalClosure out;
  std::unordered_set<PartitionDiagram> seen;
  for (const auto& g : gens) {
    if (rank(g) != r) throw std::invalid_argument("principal_closure: generator outside J_r");
    if (seen.insert(g).second) out.elements.push_back(g);
  }
  std::vector<PartitionDiagram> basis = out.elements;
  for (std::size_t i = 0; i < out.elements.size(); ++i) {
    for (const auto& g : basis) {
      PartitionDiagram x = multiply(out.elements[i], g);
      if (rank(x) != r) {
        out.has_zero = true;
        continue;
      }
      if (seen.insert(x).second) out.elements.push_back(std::move(x));
    }
  }
  return out;
}

bool is_generating(const std::vector<PartitionDiagram>& x,
                   const std::vector<PartitionDiagram>& target) {
  return same_set(closure(x), target);
}

bool is_generating(const std::vector<Transformation>& x, const std::vector<Transformation>& target) {
  return same_set(closure(x), target);
}

bool generates_principal_factor(const std::vector<PartitionDiagram>& x,
                                const std::vector<PartitionDiagram>& jclass, unsigned r) {
  return same_set(principal_closure(r, x).elements, jclass);
}

// -------------------------------------------------------------- CayleyTable

namespace {

template <class T, class Mul>
std::vector<std::uint32_t> build_table(const std::vector<T>& el, Mul mul) {
  std::unordered_map<T, std::uint32_t> index;
  for (std::uint32_t i = 0; i < el.size(); ++i) index.emplace(el[i], i);
  if (index.size() != el.size()) throw std::invalid_argument("CayleyTable: repeated element");
  std::vector<std::uint32_t> table(el.size() * el.size());
  for (std::size_t a = 0; a < el.size(); ++a)
    for (std::size_t b = 0; b < el.size(); ++b) {
      auto it = index.find(mul(el[a], el[b]));
      if (it == index.end()) throw std::invalid_argument("CayleyTable: set is not closed");
      table[a * el.size() + b] = it->second;
    }
  return table;
}

}  // namespace

CayleyTable::CayleyTable(std::vector<PartitionDiagram> elements)
    : size_(elements.size()),
      table_(build_table(elements, [](const PartitionDiagram& a, const PartitionDiagram& b) {
        return multiply(a, b);
      })) {}

CayleyTable::CayleyTable(std::vector<Transformation> elements)
    : size_(elements.size()),
      table_(build_table(elements,
                         [](const Transformation& a, const Transformation& b) { return a * b; })) {}

std::vector<std::uint32_t> CayleyTable::closure(const std::vector<std::uint32_t>& gens) const {
  std::vector<char> seen(size_, 0);
  std::vector<std::uint32_t> out;
  for (auto g : gens)
    if (!seen[g]) {
      seen[g] = 1;
      out.push_back(g);
    }
  const std::vector<std::uint32_t> basis = out;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::uint32_t* row = &table_[out[i] * size_];
    for (auto g : basis) {
      std::uint32_t x = row[g];
      if (!seen[x]) {
        seen[x] = 1;
        out.push_back(x);
      }
    }
  }
  return out;
}

std::size_t CayleyTable::closure_size(const std::vector<std::uint32_t>& gens) const {
  return closure(gens).size();
}

}  // namespace diagmon
