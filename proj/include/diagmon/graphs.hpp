#ifndef DIAGMON_GRAPHS_HPP
#define DIAGMON_GRAPHS_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "diagmon/counting.hpp"
#include "diagmon/diagram.hpp"
#include "diagmon/family.hpp"
#include "json.hpp"

namespace diagmon {

using Arc = std::pair<unsigned, unsigned>;
using Matrix01 = std::vector<std::vector<std::uint8_t>>;

struct TwoColouredDiGraph {
  std::vector<std::string> labels;
  std::vector<PartitionDiagram> projections;  // parallel to labels when built from a J-class
  Family family = Family::Partition;
  unsigned n = 0;
  unsigned r = 0;
  std::set<Arc> blue;
  std::set<Arc> red;

  unsigned size() const { return static_cast<unsigned>(labels.size()); }
  std::optional<unsigned> vertex(const std::string& label) const;
  Matrix01 blue_matrix() const;
};

struct BipartiteGraph {
  std::vector<std::string> left;
  std::vector<std::string> right;
  std::vector<std::vector<unsigned>> adj;  // left index -> sorted right indices

  std::size_t edge_count() const;
};

struct UndirectedGraph {
  std::vector<std::string> labels;
  std::set<Arc> edges;  // first < second
};

// Projections of the rank-r J-class, in vertex order.
std::vector<PartitionDiagram> projections(Family f, unsigned n, unsigned r);
std::string projection_label(Family f, unsigned n, unsigned r, const PartitionDiagram& p);

TwoColouredDiGraph projection_graph(Family f, unsigned n, unsigned r);
TwoColouredDiGraph projection_graph(Family f, unsigned n);  // top singular class

BipartiteGraph graham_houghton(Family f, unsigned n, unsigned r);

struct RedArc {
  unsigned from;
  unsigned to;
};
// The arc p -> q with f = pq, where p = ff* and q = f*f.
RedArc decode_idempotent(const TwoColouredDiGraph& g, const PartitionDiagram& f);
TwoColouredDiGraph add_red(const TwoColouredDiGraph& g, const std::vector<PartitionDiagram>& F);

struct CircuitVerdict {
  bool holds = true;
  std::vector<unsigned> failing;                 // vertices without the property
  std::vector<std::vector<unsigned>> witnesses;  // per vertex, empty when failing
};

CircuitVerdict rbr_generates(const TwoColouredDiGraph& g);
CircuitVerdict red_circuit_cover(const TwoColouredDiGraph& g);
// Every vertex has a red arc in and a red arc out.
CircuitVerdict red_in_out(const TwoColouredDiGraph& g);

enum class PermanentMethod { Auto, Ryser, Sparse };
BigCount permanent(const Matrix01& a, PermanentMethod method = PermanentMethod::Auto);

BigCount balanced_subgraph_count(const TwoColouredDiGraph& g);
// Each entry lists the successor of every vertex.
std::vector<std::vector<unsigned>> balanced_subgraphs(const TwoColouredDiGraph& g,
                                                      std::size_t limit = 10'000'000);

bool strong_hall(const BipartiteGraph& d);
bool strong_hall_exhaustive(const BipartiteGraph& d);
bool strong_hall_matching(const BipartiteGraph& d);

// X: rank n-1 idempotents of T_n, each mapping one point i to j.
bool tournament_generates(const std::vector<Transformation>& x);

UndirectedGraph johnson_graph(unsigned n);
UndirectedGraph underlying_simple_graph(const TwoColouredDiGraph& g);
bool johnson_iso_check(unsigned n);

std::string to_dot(const TwoColouredDiGraph& g);
nlohmann::json to_json(const TwoColouredDiGraph& g);
nlohmann::json to_json(const BipartiteGraph& g);
nlohmann::json to_json(const UndirectedGraph& g);

}  // namespace diagmon

#endif
