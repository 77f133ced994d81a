#ifndef DIAGMON_ORACLE_HPP
#define DIAGMON_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diagmon/counting.hpp"
#include "diagmon/diagram.hpp"
#include "diagmon/family.hpp"
#include "diagmon/repdims.hpp"
#include "diagmon/semigroup.hpp"
#include "json.hpp"

namespace diagmon {

// Largest number of closures an oracle will run before giving up.
constexpr std::uint64_t kOracleCostGuard = 5'000'000;

/**
 * The singular part of a diagram monoid with its Cayley table, and the
 * idempotents of its top J-class as table indices.
 */
struct SingularIdeal {
  Family family = Family::Partition;
  unsigned n = 0;
  int top_rank = -1;
  std::vector<PartitionDiagram> elements;
  CayleyTable table;
  std::vector<std::uint32_t> top_idempotents;

  bool generates(const std::vector<std::uint32_t>& gens) const {
    return table.closure_size(gens) == elements.size();
  }
};

SingularIdeal singular_ideal(Family f, unsigned n);

// Subsets of the top idempotents of size rank(I_top) that generate the singular part.
BigCount brute_min_idgen_count(Family f, unsigned n);
// All subsets of the top idempotents that generate the singular part.
BigCount brute_idgen_subset_count(Family f, unsigned n);
BigCount brute_strong_tournaments(unsigned n);
// Fillings of lambda by 1..|lambda| increasing along rows and columns.
BigCount brute_standard_fillings(const IntegerPartition& lambda);

struct VerifyRecord {
  std::string theorem;
  std::string instance;
  bool pass = false;
  std::optional<std::string> witness;
};

nlohmann::json to_json(const VerifyRecord& rec);

std::vector<std::string> theorem_ids();

// Throws std::invalid_argument for an unknown id and GuardExceeded when
// an instance is out of reach.
std::vector<VerifyRecord> verify_theorem(const std::string& id, unsigned lo, unsigned hi);

}  // namespace diagmon

#endif
