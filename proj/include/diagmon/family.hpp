#ifndef DIAGMON_FAMILY_HPP
#define DIAGMON_FAMILY_HPP

#include <string_view>

namespace diagmon {

enum class Family {
  Partition,
  Brauer,
  Jones,
  PlanarPartition,
  FullTransformation,
  SingularTransformation
};

std::string_view family_name(Family f);

// Accepts the names printed by family_name plus a few short aliases.
// Throws std::invalid_argument on anything else.
Family parse_family(std::string_view text);

bool is_diagram_family(Family f);

// Rank of the top J-class below the group of units, or -1 when the
// singular part is empty.
int top_singular_rank(Family f, unsigned n);

}  // namespace diagmon

#endif
