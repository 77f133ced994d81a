#ifndef DIAGMON_DIAGRAM_HPP
#define DIAGMON_DIAGRAM_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace diagmon {

constexpr unsigned kMaxDegree = 32;

// Equivalence relation on {1..n}; class ids are in first-occurrence order.
class SetPartition {
 public:
  SetPartition() = default;
  explicit SetPartition(const std::vector<unsigned>& labels);

  unsigned size() const { return static_cast<unsigned>(ids_.size()); }
  unsigned num_classes() const { return classes_; }
  unsigned class_of(unsigned i) const { return ids_.at(i); }
  const std::vector<unsigned>& class_ids() const { return ids_; }
  // Members are 1-based.
  std::vector<std::vector<unsigned>> classes() const;
  bool is_trivial() const { return classes_ == size(); }
  std::string to_string() const;

  auto operator<=>(const SetPartition&) const = default;

 private:
  std::vector<unsigned> ids_;
  unsigned classes_ = 0;
};

struct DiagramSignature {
  std::vector<unsigned> dom;
  std::vector<unsigned> codom;
  SetPartition ker;
  SetPartition coker;
  unsigned rank = 0;
};

/**
 * A set partition of {1..n} u {1'..n'}.
 *
 * Points are signed: +k is the top point k, -k the bottom point k'.
 * Internally each of the 2n positions (tops first, then bottoms) carries a
 * block label, relabelled in first-occurrence order, so equal diagrams have
 * identical storage.
 */
class PartitionDiagram {
 public:
  PartitionDiagram() = default;

  static PartitionDiagram identity(unsigned n);
  static PartitionDiagram from_blocks(unsigned n, const std::vector<std::vector<int>>& blocks);
  // labels[p] for p in [0, 2n); any values, normalized on entry.
  static PartitionDiagram from_labels(unsigned n, const unsigned* labels);

  unsigned degree() const { return n_; }
  unsigned block_count() const { return nblocks_; }
  // Position p: top k at k-1, bottom k at n+k-1.
  unsigned label(unsigned p) const { return lab_[p]; }
  unsigned label_of(int point) const;

  std::vector<std::vector<int>> blocks() const;
  std::string to_string() const;
  std::size_t hash() const;

  bool operator==(const PartitionDiagram& o) const { return n_ == o.n_ && lab_ == o.lab_; }
  bool operator<(const PartitionDiagram& o) const {
    return n_ != o.n_ ? n_ < o.n_ : lab_ < o.lab_;
  }

 private:
  std::uint8_t n_ = 0;
  std::uint8_t nblocks_ = 0;
  std::array<std::uint8_t, 2 * kMaxDegree> lab_{};
};

struct Composition {
  PartitionDiagram product;
  unsigned m = 0;  // components lying wholly in the middle row
};

PartitionDiagram parse_diagram(std::string_view text, unsigned n);

Composition compose(const PartitionDiagram& a, const PartitionDiagram& b);
PartitionDiagram multiply(const PartitionDiagram& a, const PartitionDiagram& b);

PartitionDiagram star(const PartitionDiagram& a);

DiagramSignature signature(const PartitionDiagram& a);
unsigned rank(const PartitionDiagram& a);

struct Classification {
  bool brauer = false;
  bool planar = false;
  bool jones = false;
  bool idempotent = false;
  bool projection = false;
};

Classification classify(const PartitionDiagram& a);
bool is_brauer(const PartitionDiagram& a);
bool is_planar(const PartitionDiagram& a);
bool is_idempotent(const PartitionDiagram& a);
bool is_projection(const PartitionDiagram& a);

// kind is one of pi_i, pi_ij, lambda_ij, rho_ij, tau_ij, tau_i, sigma_ijk,
// lambda_i, rho_i, identity. Indices are 1-based.
PartitionDiagram generator(std::string_view kind, const std::vector<unsigned>& idx, unsigned n);

// Compact names: pi2, pi12, lam31, rho12, tau13, tau1, sig214, id.
// With n >= 10 multi-index names need the long form pi_3_12.
PartitionDiagram named_generator(std::string_view name, unsigned n);
std::vector<PartitionDiagram> named_generators(std::string_view comma_list, unsigned n);

// The doubling map from planar partitions of degree n into J_{2n}.
PartitionDiagram planar_to_jones(const PartitionDiagram& a);

// Full transformations acting on the right: x(ab) = (xa)b.
class Transformation {
 public:
  Transformation() = default;
  // images are 1-based.
  explicit Transformation(const std::vector<unsigned>& images);
  static Transformation identity(unsigned n);
  // The rank n-1 idempotent mapping i to j and fixing every other point.
  static Transformation elementary(unsigned n, unsigned i, unsigned j);

  unsigned degree() const { return static_cast<unsigned>(img_.size()); }
  unsigned operator[](unsigned x) const { return img_[x - 1] + 1u; }
  unsigned rank() const;
  SetPartition kernel() const;
  std::vector<unsigned> image() const;
  bool is_idempotent() const;
  std::string to_string() const;
  std::size_t hash() const;

  friend Transformation operator*(const Transformation& a, const Transformation& b);
  auto operator<=>(const Transformation&) const = default;

 private:
  std::vector<std::uint8_t> img_;
};

}  // namespace diagmon

template <>
struct std::hash<diagmon::PartitionDiagram> {
  std::size_t operator()(const diagmon::PartitionDiagram& d) const noexcept { return d.hash(); }
};

template <>
struct std::hash<diagmon::Transformation> {
  std::size_t operator()(const diagmon::Transformation& t) const noexcept { return t.hash(); }
};

#endif
