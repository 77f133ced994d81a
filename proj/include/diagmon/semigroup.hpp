#ifndef DIAGMON_SEMIGROUP_HPP
#define DIAGMON_SEMIGROUP_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "diagmon/counting.hpp"
#include "diagmon/diagram.hpp"
#include "diagmon/family.hpp"

namespace diagmon {

constexpr std::uint64_t kEnumerationGuard = 10'000'000;

struct MonoidFamily {
  Family tag = Family::Partition;
  unsigned n = 1;
};

struct JClassDescriptor {
  Family family = Family::Partition;
  unsigned n = 0;
  unsigned r = 0;
  std::uint64_t r_class_count = 0;
  std::uint64_t l_class_count = 0;
  std::uint64_t h_size = 0;
  std::uint64_t size = 0;
  bool is_group = false;
};

// Thrown when a request would exceed kEnumerationGuard.
struct GuardExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<PartitionDiagram> enumerate_diagrams(Family f, unsigned n);
std::vector<Transformation> enumerate_transformations(Family f, unsigned n);

// Rank of a transformation or diagram, uniformly.
inline unsigned element_rank(const PartitionDiagram& a) { return rank(a); }
inline unsigned element_rank(const Transformation& t) { return t.rank(); }

// Green's class keys; equal keys <=> same class.
std::vector<unsigned> r_class_key(Family f, const PartitionDiagram& a);
std::vector<unsigned> l_class_key(Family f, const PartitionDiagram& a);
std::vector<unsigned> r_class_key(const Transformation& t);
std::vector<unsigned> l_class_key(const Transformation& t);

std::vector<JClassDescriptor> green_classes(Family f, unsigned n);
std::string jclass_csv(const std::vector<JClassDescriptor>& classes);

std::vector<PartitionDiagram> ideal_elements(Family f, unsigned n, unsigned r);
std::vector<Transformation> ideal_transformations(unsigned n, unsigned r);

// Everything outside the group of units.
std::vector<PartitionDiagram> singular_part(Family f, unsigned n);

// ab when it stays in the J-class of rank r, nullopt for the zero.
std::optional<PartitionDiagram> principal_factor_product(unsigned r, const PartitionDiagram& a,
                                                         const PartitionDiagram& b);

/**
 * Subsemigroup generated by gens under mul.
 *
 * Elements appear in discovery order: the generators (deduplicated) first,
 * then right multiples by generators in breadth-first order.
 */
template <class T, class Mul>
std::vector<T> closure(const std::vector<T>& gens, Mul mul) {
  std::vector<T> out;
  std::unordered_set<T> seen;
  for (const auto& g : gens)
    if (seen.insert(g).second) out.push_back(g);
  std::vector<T> basis = out;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : basis) {
      T x = mul(out[i], g);
      if (seen.insert(x).second) out.push_back(std::move(x));
    }
  }
  return out;
}

std::vector<PartitionDiagram> closure(const std::vector<PartitionDiagram>& gens);
std::vector<Transformation> closure(const std::vector<Transformation>& gens);

struct PrincipalClosure {
  std::vector<PartitionDiagram> elements;  // nonzero part
  bool has_zero = false;
};

// Closure inside the principal factor J_r*.
PrincipalClosure principal_closure(unsigned r, const std::vector<PartitionDiagram>& gens);

// closure(X) equals target as a set.
bool is_generating(const std::vector<PartitionDiagram>& x,
                   const std::vector<PartitionDiagram>& target);
bool is_generating(const std::vector<Transformation>& x, const std::vector<Transformation>& target);

// X generates the principal factor J_r* (zero adjoined by convention).
bool generates_principal_factor(const std::vector<PartitionDiagram>& x,
                                const std::vector<PartitionDiagram>& jclass, unsigned r);

/**
 * A finite monoid with a precomputed Cayley table, for repeated closures
 * over index sets.
 */
class CayleyTable {
 public:
  explicit CayleyTable(std::vector<PartitionDiagram> elements);
  explicit CayleyTable(std::vector<Transformation> elements);

  std::size_t size() const { return size_; }
  std::uint32_t product(std::uint32_t a, std::uint32_t b) const { return table_[a * size_ + b]; }
  // Size of the subsemigroup generated by the listed indices.
  std::size_t closure_size(const std::vector<std::uint32_t>& gens) const;
  std::vector<std::uint32_t> closure(const std::vector<std::uint32_t>& gens) const;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint32_t> table_;
};

}  // namespace diagmon

#endif
