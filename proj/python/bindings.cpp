#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "diagmon/counting.hpp"
#include "diagmon/diagram.hpp"
#include "diagmon/family.hpp"
#include "diagmon/graphs.hpp"
#include "diagmon/oracle.hpp"
#include "diagmon/repdims.hpp"
#include "diagmon/tables.hpp"

namespace py = pybind11;
using namespace diagmon;

namespace {

// Big counts cross the boundary as Python ints.
py::int_ big(const BigCount& x) { return py::int_(py::str(x.get_str())); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Diagram monoid computations";

  py::class_<PartitionDiagram>(m, "Diagram")
      .def_static("parse", [](const std::string& s, unsigned n) { return parse_diagram(s, n); })
      .def_static("identity", &PartitionDiagram::identity)
      .def_static("generator", [](const std::string& name, unsigned n) { return named_generator(name, n); })
      .def_property_readonly("degree", &PartitionDiagram::degree)
      .def_property_readonly("rank", [](const PartitionDiagram& a) { return rank(a); })
      .def("blocks", &PartitionDiagram::blocks)
      .def("star", [](const PartitionDiagram& a) { return star(a); })
      .def("is_planar", [](const PartitionDiagram& a) { return is_planar(a); })
      .def("is_idempotent", [](const PartitionDiagram& a) { return is_idempotent(a); })
      .def("is_projection", [](const PartitionDiagram& a) { return is_projection(a); })
      .def("__mul__", [](const PartitionDiagram& a, const PartitionDiagram& b) { return multiply(a, b); })
      .def("__eq__", [](const PartitionDiagram& a, const PartitionDiagram& b) { return a == b; })
      .def("__hash__", &PartitionDiagram::hash)
      .def("__str__", &PartitionDiagram::to_string)
      .def("__repr__", [](const PartitionDiagram& a) { return "Diagram(" + a.to_string() + ")"; });

  m.def("compose", [](const PartitionDiagram& a, const PartitionDiagram& b) {
    auto c = compose(a, b);
    return py::make_tuple(c.product, c.m);
  });

  m.def("rank_ideal", [](const std::string& fam, unsigned n, unsigned r) {
    return big(rank_ideal(parse_family(fam), n, r));
  });
  m.def("family_size", [](const std::string& fam, unsigned n) { return big(family_size(parse_family(fam), n)); });
  m.def("strong_tournaments", [](unsigned n) { return big(strong_tournaments_w(n)); });
  m.def("partition_gsets", [](unsigned n) { return big(partition_gsets(n)); });
  m.def("jones_f", [](unsigned n) { return big(jones_f(n)); });

  m.def("balanced_subgraph_count", [](const std::string& fam, unsigned n) {
    return big(balanced_subgraph_count(projection_graph(parse_family(fam), n)));
  });
  m.def("projection_labels", [](const std::string& fam, unsigned n) {
    return projection_graph(parse_family(fam), n).labels;
  });
  m.def("rbr_generates", [](const std::string& fam, unsigned n, const std::string& spec) {
    auto g = add_red(projection_graph(parse_family(fam), n), named_generators(spec, n));
    auto v = rbr_generates(g);
    std::vector<std::string> failing;
    for (unsigned x : v.failing) failing.push_back(g.labels[x]);
    return py::make_tuple(v.holds, failing);
  });

  m.def("dim_partition_algebra", [](unsigned n, std::vector<unsigned> mu) {
    return big(dim_partition_algebra(n, IntegerPartition(std::move(mu))));
  });
  m.def("bratteli_paths", [](unsigned n, std::vector<unsigned> mu) {
    return big(bratteli_paths(n, IntegerPartition(std::move(mu))));
  });

  m.def("table", [](int id, std::optional<unsigned> max_n, const std::string& fmt) {
    return render(make_table(id, max_n), parse_table_format(fmt));
  }, py::arg("id"), py::arg("max_n") = py::none(), py::arg("format") = "csv");

  m.def("verify", [](const std::string& id, unsigned lo, unsigned hi) {
    std::vector<py::dict> out;
    for (const auto& r : verify_theorem(id, lo, hi)) {
      py::dict d;
      d["theorem"] = r.theorem;
      d["instance"] = r.instance;
      d["status"] = r.pass ? "pass" : "fail";
      if (r.witness) d["witness"] = *r.witness;
      out.push_back(d);
    }
    return out;
  });
}
