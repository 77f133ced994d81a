#include "diagmon/family.hpp"

#include <stdexcept>
#include <string>

namespace diagmon {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Partition: return "partition";
    case Family::Brauer: return "brauer";
    case Family::Jones: return "jones";
    case Family::PlanarPartition: return "planar";
    case Family::FullTransformation: return "transformation";
    case Family::SingularTransformation: return "singular";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  if (text == "partition" || text == "P") return Family::Partition;
  if (text == "brauer" || text == "B") return Family::Brauer;
  if (text == "jones" || text == "J" || text == "temperley-lieb") return Family::Jones;
  if (text == "planar" || text == "planar-partition" || text == "PP")
    return Family::PlanarPartition;
  if (text == "transformation" || text == "full-transformation" || text == "T")
    return Family::FullTransformation;
  if (text == "singular" || text == "Sing") return Family::SingularTransformation;
  throw std::invalid_argument("unknown family: " + std::string(text));
}

bool is_diagram_family(Family f) {
  return f != Family::FullTransformation && f != Family::SingularTransformation;
}

int top_singular_rank(Family f, unsigned n) {
  int m = static_cast<int>(n);
  switch (f) {
    case Family::Brauer:
    case Family::Jones:
      return m - 2;
    case Family::FullTransformation:
    case Family::SingularTransformation:
      return m >= 2 ? m - 1 : -1;
    default:
      return m - 1;
  }
}

}  // namespace diagmon
