#include "diagmon/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace diagmon {

// ---------------------------------------------------------------- SetPartition

SetPartition::SetPartition(const std::vector<unsigned>& labels) : ids_(labels.size()) {
  std::vector<std::pair<unsigned, unsigned>> seen;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto it = std::find_if(seen.begin(), seen.end(),
                           [&](const auto& p) { return p.first == labels[i]; });
    if (it == seen.end()) {
      seen.emplace_back(labels[i], classes_);
      ids_[i] = classes_++;
    } else {
      ids_[i] = it->second;
    }
  }
}

std::vector<std::vector<unsigned>> SetPartition::classes() const {
  std::vector<std::vector<unsigned>> out(classes_);
  for (unsigned i = 0; i < ids_.size(); ++i) out[ids_[i]].push_back(i + 1);
  return out;
}

std::string SetPartition::to_string() const {
  std::string s;
  for (const auto& c : classes()) {
    s += '{';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(c[k]);
    }
    s += '}';
  }
  return s;
}

// ------------------------------------------------------------ PartitionDiagram

namespace {

unsigned position_of(int point, unsigned n) {
  return point > 0 ? static_cast<unsigned>(point) - 1 : n + static_cast<unsigned>(-point) - 1;
}

int point_at(unsigned p, unsigned n) {
  return p < n ? static_cast<int>(p + 1) : -static_cast<int>(p - n + 1);
}

void check_degree(unsigned n) {
  if (n > kMaxDegree) throw std::invalid_argument("degree exceeds " + std::to_string(kMaxDegree));
}

}  // namespace

PartitionDiagram PartitionDiagram::identity(unsigned n) {
  check_degree(n);
  std::vector<unsigned> lab(2 * n);
  for (unsigned k = 0; k < n; ++k) lab[k] = lab[n + k] = k;
  return from_labels(n, lab.data());
}

PartitionDiagram PartitionDiagram::from_labels(unsigned n, const unsigned* labels) {
  check_degree(n);
  PartitionDiagram d;
  d.n_ = static_cast<std::uint8_t>(n);
  std::array<std::uint8_t, 256> relabel;
  relabel.fill(0xFF);
  unsigned next = 0;
  for (unsigned p = 0; p < 2 * n; ++p) {
    if (labels[p] >= relabel.size()) throw std::invalid_argument("block label out of range");
    auto& r = relabel[labels[p]];
    if (r == 0xFF) r = static_cast<std::uint8_t>(next++);
    d.lab_[p] = r;
  }
  d.nblocks_ = static_cast<std::uint8_t>(next);
  return d;
}

PartitionDiagram PartitionDiagram::from_blocks(unsigned n,
                                               const std::vector<std::vector<int>>& blocks) {
  check_degree(n);
  std::vector<unsigned> lab(2 * n, ~0u);
  for (unsigned b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw std::invalid_argument("empty block");
    for (int x : blocks[b]) {
      if (x == 0 || x > static_cast<int>(n) || x < -static_cast<int>(n))
        throw std::invalid_argument("point " + std::to_string(x) + " out of range");
      unsigned p = position_of(x, n);
      if (lab[p] != ~0u) throw std::invalid_argument("point " + std::to_string(x) + " repeated");
      lab[p] = b;
    }
  }
  for (unsigned p = 0; p < 2 * n; ++p)
    if (lab[p] == ~0u)
      throw std::invalid_argument("point " + std::to_string(point_at(p, n)) + " missing");
  return from_labels(n, lab.data());
}

unsigned PartitionDiagram::label_of(int point) const { return lab_[position_of(point, n_)]; }

std::vector<std::vector<int>> PartitionDiagram::blocks() const {
  std::vector<std::vector<int>> out(nblocks_);
  for (unsigned p = 0; p < 2u * n_; ++p) out[lab_[p]].push_back(point_at(p, n_));
  return out;
}

std::string PartitionDiagram::to_string() const {
  std::string s = "[";
  bool first_block = true;
  for (const auto& b : blocks()) {
    if (!first_block) s += ',';
    first_block = false;
    s += '{';
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(b[k]);
    }
    s += '}';
  }
  return s + "]";
}

std::size_t PartitionDiagram::hash() const {
  std::uint64_t h = 1469598103934665603ull ^ n_;
  for (unsigned p = 0; p < 2u * n_; ++p) {
    h ^= lab_[p];
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

PartitionDiagram parse_diagram(std::string_view text, unsigned n) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) -> void {
    throw std::invalid_argument("malformed diagram at offset " + std::to_string(i) + ": " + why);
  };
  auto expect = [&](char c) {
    skip();
    if (i >= text.size() || text[i] != c) fail(std::string("expected '") + c + "'");
    ++i;
  };
  auto peek = [&]() -> char {
    skip();
    return i < text.size() ? text[i] : '\0';
  };

  std::vector<std::vector<int>> blocks;
  expect('[');
  if (peek() != ']') {
    for (;;) {
      expect('{');
      std::vector<int> block;
      for (;;) {
        skip();
        bool neg = false;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) neg = text[i++] == '-';
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
          fail("expected integer");
        long v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          v = v * 10 + (text[i++] - '0');
          if (v > 1000000) fail("integer too large");
        }
        block.push_back(static_cast<int>(neg ? -v : v));
        char c = peek();
        if (c == ',') {
          ++i;
          continue;
        }
        if (c == '}') {
          ++i;
          break;
        }
        fail("expected ',' or '}'");
      }
      blocks.push_back(std::move(block));
      char c = peek();
      if (c == ',') {
        ++i;
        continue;
      }
      if (c == ']') break;
      fail("expected ',' or ']'");
    }
  }
  expect(']');
  skip();
  if (i != text.size()) fail("trailing characters");
  return PartitionDiagram::from_blocks(n, blocks);
}

// ----------------------------------------------------------------- products

Composition compose(const PartitionDiagram& a, const PartitionDiagram& b) {
  const unsigned n = a.degree();
  if (b.degree() != n) throw std::invalid_argument("compose: degree mismatch");

  // Nodes: [0,n) top of a, [n,2n) middle row, [2n,3n) bottom of b.
  std::array<std::uint8_t, 3 * kMaxDegree> parent;
  for (unsigned v = 0; v < 3 * n; ++v) parent[v] = static_cast<std::uint8_t>(v);
  auto find = [&](unsigned v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  auto unite = [&](unsigned x, unsigned y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = static_cast<std::uint8_t>(std::min(x, y));
  };

  std::array<std::uint8_t, 2 * kMaxDegree> first;
  first.fill(0xFF);
  for (unsigned p = 0; p < 2 * n; ++p) {
    auto& f = first[a.label(p)];
    if (f == 0xFF) f = static_cast<std::uint8_t>(p);
    else unite(f, p);
  }
  first.fill(0xFF);
  for (unsigned p = 0; p < 2 * n; ++p) {
    unsigned node = n + p;
    auto& f = first[b.label(p)];
    if (f == 0xFF) f = static_cast<std::uint8_t>(node);
    else unite(f, node);
  }

  std::array<unsigned, 2 * kMaxDegree> lab;
  std::array<bool, 3 * kMaxDegree> outer{};
  for (unsigned k = 0; k < n; ++k) {
    lab[k] = find(k);
    lab[n + k] = find(2 * n + k);
    outer[lab[k]] = outer[lab[n + k]] = true;
  }
  Composition out;
  std::array<bool, 3 * kMaxDegree> counted{};
  for (unsigned v = n; v < 2 * n; ++v) {
    unsigned r = find(v);
    if (!outer[r] && !counted[r]) {
      counted[r] = true;
      ++out.m;
    }
  }
  out.product = PartitionDiagram::from_labels(n, lab.data());
  return out;
}

PartitionDiagram multiply(const PartitionDiagram& a, const PartitionDiagram& b) {
  return compose(a, b).product;
}

PartitionDiagram star(const PartitionDiagram& a) {
  const unsigned n = a.degree();
  std::array<unsigned, 2 * kMaxDegree> lab;
  for (unsigned k = 0; k < n; ++k) {
    lab[k] = a.label(n + k);
    lab[n + k] = a.label(k);
  }
  return PartitionDiagram::from_labels(n, lab.data());
}

DiagramSignature signature(const PartitionDiagram& a) {
  const unsigned n = a.degree();
  std::vector<bool> top(a.block_count()), bottom(a.block_count());
  for (unsigned k = 0; k < n; ++k) {
    top[a.label(k)] = true;
    bottom[a.label(n + k)] = true;
  }
  DiagramSignature s;
  std::vector<unsigned> ker(n), coker(n);
  for (unsigned k = 0; k < n; ++k) {
    ker[k] = a.label(k);
    coker[k] = a.label(n + k);
    if (bottom[ker[k]]) s.dom.push_back(k + 1);
    if (top[coker[k]]) s.codom.push_back(k + 1);
  }
  s.ker = SetPartition(ker);
  s.coker = SetPartition(coker);
  for (unsigned b = 0; b < a.block_count(); ++b)
    if (top[b] && bottom[b]) ++s.rank;
  return s;
}

unsigned rank(const PartitionDiagram& a) {
  const unsigned n = a.degree();
  std::array<std::uint8_t, 2 * kMaxDegree> seen{};
  for (unsigned k = 0; k < n; ++k) seen[a.label(k)] |= 1;
  for (unsigned k = 0; k < n; ++k) seen[a.label(n + k)] |= 2;
  unsigned r = 0;
  for (unsigned b = 0; b < a.block_count(); ++b) r += seen[b] == 3;
  return r;
}

// ------------------------------------------------------------ classification

bool is_brauer(const PartitionDiagram& a) {
  std::array<unsigned, 2 * kMaxDegree> size{};
  for (unsigned p = 0; p < 2 * a.degree(); ++p) ++size[a.label(p)];
  for (unsigned b = 0; b < a.block_count(); ++b)
    if (size[b] != 2) return false;
  return true;
}

bool is_planar(const PartitionDiagram& a) {
  const unsigned n = a.degree();
  // Walk the boundary 1..n, n'..1'.
  std::array<unsigned, 2 * kMaxDegree> seq;
  for (unsigned k = 0; k < n; ++k) {
    seq[k] = a.label(k);
    seq[2 * n - 1 - k] = a.label(n + k);
  }
  std::array<unsigned, 2 * kMaxDegree> last{};
  for (unsigned c = 0; c < 2 * n; ++c) last[seq[c]] = c;
  std::array<bool, 2 * kMaxDegree> open{};
  std::vector<unsigned> stack;
  for (unsigned c = 0; c < 2 * n; ++c) {
    unsigned b = seq[c];
    if (!open[b]) {
      if (last[b] != c) {
        open[b] = true;
        stack.push_back(b);
      }
      continue;
    }
    if (stack.back() != b) return false;
    if (last[b] == c) stack.pop_back();
  }
  return true;
}

bool is_idempotent(const PartitionDiagram& a) { return multiply(a, a) == a; }

bool is_projection(const PartitionDiagram& a) { return star(a) == a && is_idempotent(a); }

Classification classify(const PartitionDiagram& a) {
  Classification c;
  c.brauer = is_brauer(a);
  c.planar = is_planar(a);
  c.jones = c.brauer && c.planar;
  c.idempotent = is_idempotent(a);
  c.projection = c.idempotent && star(a) == a;
  return c;
}

// ---------------------------------------------------------------- generators

namespace {

PartitionDiagram with_blocks(unsigned n, const std::vector<unsigned>& used,
                             std::vector<std::vector<int>> blocks) {
  for (unsigned k = 1; k <= n; ++k)
    if (std::find(used.begin(), used.end(), k) == used.end())
      blocks.push_back({static_cast<int>(k), -static_cast<int>(k)});
  return PartitionDiagram::from_blocks(n, blocks);
}

void check_indices(const std::vector<unsigned>& idx, std::size_t want, unsigned n) {
  if (idx.size() != want)
    throw std::invalid_argument("expected " + std::to_string(want) + " indices");
  for (std::size_t a = 0; a < idx.size(); ++a) {
    if (idx[a] < 1 || idx[a] > n)
      throw std::invalid_argument("index " + std::to_string(idx[a]) + " out of range");
    for (std::size_t b = 0; b < a; ++b)
      if (idx[a] == idx[b]) throw std::invalid_argument("repeated index");
  }
}

}  // namespace

PartitionDiagram generator(std::string_view kind, const std::vector<unsigned>& idx, unsigned n) {
  check_degree(n);
  if (kind == "identity") {
    check_indices(idx, 0, n);
    return PartitionDiagram::identity(n);
  }
  if (kind == "tau_i" || kind == "lambda_i" || kind == "rho_i") {
    check_indices(idx, 1, n);
    unsigned i = idx[0];
    if (kind == "tau_i") return generator("tau_ij", {i, i + 1}, n);
    if (kind == "lambda_i") return generator("sigma_ijk", {i, i + 1, i + 2}, n);
    return generator("sigma_ijk", {i + 2, i + 1, i}, n);
  }
  if (kind == "pi_i") {
    check_indices(idx, 1, n);
    int i = static_cast<int>(idx[0]);
    return with_blocks(n, idx, {{i}, {-i}});
  }
  if (kind == "sigma_ijk") {
    check_indices(idx, 3, n);
    int i = static_cast<int>(idx[0]), j = static_cast<int>(idx[1]), k = static_cast<int>(idx[2]);
    return with_blocks(n, idx, {{i, j}, {k, -i}, {-j, -k}});
  }
  check_indices(idx, 2, n);
  int i = static_cast<int>(idx[0]), j = static_cast<int>(idx[1]);
  if (kind == "pi_ij") return with_blocks(n, idx, {{i, j, -i, -j}});
  if (kind == "lambda_ij") return with_blocks(n, idx, {{i, j, -i}, {-j}});
  if (kind == "rho_ij") return with_blocks(n, idx, {{j, -i, -j}, {i}});
  if (kind == "tau_ij") return with_blocks(n, idx, {{i, j}, {-i, -j}});
  throw std::invalid_argument("unknown generator kind: " + std::string(kind));
}

PartitionDiagram named_generator(std::string_view name, unsigned n) {
  std::size_t cut = 0;
  while (cut < name.size() && std::isalpha(static_cast<unsigned char>(name[cut]))) ++cut;
  std::string prefix(name.substr(0, cut));
  std::string_view rest = name.substr(cut);
  if (prefix == "id" || prefix == "identity") {
    if (!rest.empty()) throw std::invalid_argument("identity takes no indices");
    return PartitionDiagram::identity(n);
  }

  std::vector<unsigned> idx;
  auto bad = [&] { return std::invalid_argument("cannot parse generator name: " + std::string(name)); };
  if (rest.find('_') != std::string_view::npos) {
    std::size_t i = 0;
    while (i < rest.size()) {
      if (rest[i] == '_') {
        ++i;
        continue;
      }
      unsigned v = 0;
      std::size_t start = i;
      while (i < rest.size() && std::isdigit(static_cast<unsigned char>(rest[i])))
        v = v * 10 + static_cast<unsigned>(rest[i++] - '0');
      if (i == start) throw bad();
      idx.push_back(v);
    }
  } else {
    for (char c : rest)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
    if (rest.empty()) throw bad();
    if (n < 10) {
      for (char c : rest) idx.push_back(static_cast<unsigned>(c - '0'));
    } else {
      idx.push_back(static_cast<unsigned>(std::stoul(std::string(rest))));
    }
  }

  const std::size_t k = idx.size();
  if (prefix == "pi" && k == 1) return generator("pi_i", idx, n);
  if (prefix == "pi" && k == 2) return generator("pi_ij", idx, n);
  if ((prefix == "lam" || prefix == "lambda") && k == 1) return generator("lambda_i", idx, n);
  if ((prefix == "lam" || prefix == "lambda") && k == 2) return generator("lambda_ij", idx, n);
  if (prefix == "rho" && k == 1) return generator("rho_i", idx, n);
  if (prefix == "rho" && k == 2) return generator("rho_ij", idx, n);
  if (prefix == "tau" && k == 1) return generator("tau_i", idx, n);
  if (prefix == "tau" && k == 2) return generator("tau_ij", idx, n);
  if ((prefix == "sig" || prefix == "sigma") && k == 3) return generator("sigma_ijk", idx, n);
  throw bad();
}

std::vector<PartitionDiagram> named_generators(std::string_view list, unsigned n) {
  std::vector<PartitionDiagram> out;
  std::size_t i = 0;
  while (i <= list.size()) {
    std::size_t j = list.find(',', i);
    if (j == std::string_view::npos) j = list.size();
    std::string_view tok = list.substr(i, j - i);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
    if (!tok.empty()) out.push_back(named_generator(tok, n));
    i = j + 1;
  }
  return out;
}

// --------------------------------------------------------- planar to Jones

PartitionDiagram planar_to_jones(const PartitionDiagram& a) {
  if (!is_planar(a)) throw std::invalid_argument("planar_to_jones: diagram is not planar");
  const unsigned n = a.degree();
  const unsigned N = 2 * n;
  check_degree(N);
  // Top k doubles to tops 2k-1, 2k; bottom k to bottoms 2k-1, 2k. Walking the
  // boundary, the copy met first is "before" and the other is "after".
  auto cycle_pos = [&](int x) { return x > 0 ? x - 1 : static_cast<int>(N) + x; };
  auto before = [&](int x) { return x > 0 ? 2 * x - 1 : 2 * x; };
  auto after = [&](int x) { return x > 0 ? 2 * x : 2 * x + 1; };

  std::vector<unsigned> lab(2 * N, ~0u);
  unsigned next = 0;
  auto pos = [&](int x) {
    return x > 0 ? static_cast<unsigned>(x) - 1 : N + static_cast<unsigned>(-x) - 1;
  };
  for (auto block : a.blocks()) {
    std::sort(block.begin(), block.end(),
              [&](int x, int y) { return cycle_pos(x) < cycle_pos(y); });
    for (std::size_t i = 0; i < block.size(); ++i) {
      int u = after(block[i]);
      int v = before(block[(i + 1) % block.size()]);
      lab[pos(u)] = lab[pos(v)] = next++;
    }
  }
  return PartitionDiagram::from_labels(N, lab.data());
}

// ------------------------------------------------------------ Transformation

Transformation::Transformation(const std::vector<unsigned>& images) : img_(images.size()) {
  if (images.size() > 255) throw std::invalid_argument("transformation degree too large");
  for (std::size_t x = 0; x < images.size(); ++x) {
    if (images[x] < 1 || images[x] > images.size())
      throw std::invalid_argument("transformation image out of range");
    img_[x] = static_cast<std::uint8_t>(images[x] - 1);
  }
}

Transformation Transformation::identity(unsigned n) {
  std::vector<unsigned> v(n);
  std::iota(v.begin(), v.end(), 1u);
  return Transformation(v);
}

Transformation Transformation::elementary(unsigned n, unsigned i, unsigned j) {
  if (i < 1 || i > n || j < 1 || j > n || i == j)
    throw std::invalid_argument("elementary idempotent needs distinct points in range");
  std::vector<unsigned> v(n);
  std::iota(v.begin(), v.end(), 1u);
  v[i - 1] = j;
  return Transformation(v);
}

unsigned Transformation::rank() const { return static_cast<unsigned>(image().size()); }

SetPartition Transformation::kernel() const {
  return SetPartition(std::vector<unsigned>(img_.begin(), img_.end()));
}

std::vector<unsigned> Transformation::image() const {
  std::vector<bool> hit(img_.size());
  for (auto y : img_) hit[y] = true;
  std::vector<unsigned> out;
  for (unsigned y = 0; y < hit.size(); ++y)
    if (hit[y]) out.push_back(y + 1);
  return out;
}

bool Transformation::is_idempotent() const {
  for (auto y : img_)
    if (img_[y] != y) return false;
  return true;
}

std::string Transformation::to_string() const {
  std::string s = "[";
  for (std::size_t x = 0; x < img_.size(); ++x) {
    if (x) s += ',';
    s += std::to_string(img_[x] + 1);
  }
  return s + "]";
}

std::size_t Transformation::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (auto y : img_) {
    h ^= y;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

Transformation operator*(const Transformation& a, const Transformation& b) {
  if (a.img_.size() != b.img_.size()) throw std::invalid_argument("degree mismatch");
  Transformation out = a;
  for (auto& y : out.img_) y = b.img_[y];
  return out;
}

}  // namespace diagmon
