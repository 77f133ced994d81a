#ifndef DIAGMON_REPDIMS_HPP
#define DIAGMON_REPDIMS_HPP

#include <string>
#include <vector>

#include "diagmon/counting.hpp"

namespace diagmon {

class IntegerPartition {
 public:
  IntegerPartition() = default;
  // Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit IntegerPartition(std::vector<unsigned> parts);
  static IntegerPartition parse(const std::string& text);  // "2,1", "" for the empty partition

  const std::vector<unsigned>& parts() const { return parts_; }
  unsigned size() const;
  unsigned length() const { return static_cast<unsigned>(parts_.size()); }
  IntegerPartition conjugate() const;
  std::string to_string() const;  // "(2,1)", "()" when empty

  auto operator<=>(const IntegerPartition&) const = default;

 private:
  std::vector<unsigned> parts_;
};

// Partitions of r, reverse-lexicographic: (r) first, (1^r) last.
std::vector<IntegerPartition> partitions_of(unsigned r);

// Row i holds the hooks of row i of the diagram.
std::vector<std::vector<unsigned>> hook_lengths(const IntegerPartition& lambda);
BigCount std_tableaux_count(const IntegerPartition& lambda);

// Combinatorial cell-module dimensions, valid when the algebra is semisimple.
BigCount dim_partition_algebra(unsigned n, const IntegerPartition& mu);
BigCount dim_brauer_algebra(unsigned n, const IntegerPartition& mu);
BigCount dim_brauer_algebra_rank_form(unsigned n, const IntegerPartition& mu);
BigCount dim_tl_algebra(unsigned n, unsigned r);

BigCount bratteli_paths(unsigned n, const IntegerPartition& mu);

}  // namespace diagmon

#endif
