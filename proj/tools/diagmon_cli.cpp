#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "diagmon/counting.hpp"
#include "diagmon/diagram.hpp"
#include "diagmon/family.hpp"
#include "diagmon/graphs.hpp"
#include "diagmon/oracle.hpp"
#include "diagmon/repdims.hpp"
#include "diagmon/semigroup.hpp"
#include "diagmon/tables.hpp"
#include "json.hpp"

using namespace diagmon;
using nlohmann::json;

namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;

struct Options {
  std::string format = "ascii";
  long seed = 0;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string tok;
  std::stringstream ss(s);
  while (std::getline(ss, tok, sep))
    if (!tok.empty()) out.push_back(tok);
  return out;
}

// e12 maps 1 to 2; e_1_12 is the long form.
Transformation named_transformation(const std::string& name, unsigned n) {
  if (name.size() < 2 || name[0] != 'e') throw std::invalid_argument("bad transformation name: " + name);
  std::vector<unsigned> idx;
  if (name[1] == '_') {
    for (const auto& t : split(name.substr(2), '_')) idx.push_back(static_cast<unsigned>(std::stoul(t)));
  } else if (n < 10) {
    for (char c : name.substr(1)) {
      if (c < '0' || c > '9') throw std::invalid_argument("bad transformation name: " + name);
      idx.push_back(static_cast<unsigned>(c - '0'));
    }
  } else {
    throw std::invalid_argument("use the long form e_i_j when n >= 10: " + name);
  }
  if (idx.size() != 2) throw std::invalid_argument("bad transformation name: " + name);
  return Transformation::elementary(n, idx[0], idx[1]);
}

std::vector<Transformation> named_transformations(const std::string& spec, unsigned n) {
  std::vector<Transformation> out;
  for (const auto& t : split(spec, ',')) out.push_back(named_transformation(t, n));
  return out;
}

std::vector<std::string> labels_of(const TwoColouredDiGraph& g, const std::vector<unsigned>& vs) {
  std::vector<std::string> out;
  for (unsigned v : vs) out.push_back(g.labels[v]);
  return out;
}

int emit_verdict(const Options& o, const std::string& kind, bool verdict, const json& detail) {
  if (o.format == "json") {
    json j = detail;
    j["check"] = kind;
    j["verdict"] = verdict;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << (verdict ? "true" : "false") << '\n';
    for (auto it = detail.begin(); it != detail.end(); ++it) {
      std::cout << it.key() << ": ";
      if (it->is_array()) {
        bool first = true;
        for (const auto& x : *it) {
          std::cout << (first ? "" : ",") << (x.is_string() ? x.get<std::string>() : x.dump());
          first = false;
        }
        std::cout << '\n';
      } else {
        std::cout << (it->is_string() ? it->get<std::string>() : it->dump()) << '\n';
      }
    }
  }
  return verdict ? kTrue : kFalse;
}

int cmd_check(const Options& o, const std::string& kind, const std::string& fam, unsigned n,
              const std::string& spec) {
  Family f = parse_family(fam);
  if (kind == "tournament") {
    auto x = named_transformations(spec, n);
    return emit_verdict(o, kind, tournament_generates(x), json::object());
  }
  if (kind == "strong-hall") {
    int top = top_singular_rank(f, n);
    if (top < 0) throw std::invalid_argument("no singular J-class");
    auto d = graham_houghton(f, n, static_cast<unsigned>(top));
    return emit_verdict(o, kind, strong_hall(d), json{{"r_classes", d.left.size()}});
  }
  if (kind == "closure") {
    if (!is_diagram_family(f)) {
      auto x = named_transformations(spec, n);
      auto target = enumerate_transformations(Family::SingularTransformation, n);
      return emit_verdict(o, kind, is_generating(x, target),
                          json{{"closure_size", closure(x).size()}, {"target_size", target.size()}});
    }
    auto x = named_generators(spec, n);
    auto target = singular_part(f, n);
    return emit_verdict(o, kind, is_generating(x, target),
                        json{{"closure_size", closure(x).size()}, {"target_size", target.size()}});
  }
  if (kind == "rbr" || kind == "red-circuit") {
    auto g = add_red(projection_graph(f, n), named_generators(spec, n));
    auto v = kind == "rbr" ? rbr_generates(g) : red_circuit_cover(g);
    return emit_verdict(o, kind, v.holds, json{{"witness", labels_of(g, v.failing)}});
  }
  throw std::invalid_argument("unknown check kind: " + kind);
}

json bratteli_json(unsigned n) {
  json levels = json::array(), edges = json::array();
  std::vector<std::vector<unsigned>> prev{{}};
  levels.push_back({{"level", "0"}, {"vertices", json::array({"()"})}});
  auto text = [](const std::vector<unsigned>& p) { return IntegerPartition(p).to_string(); };
  for (unsigned step = 0; step < 2 * n; ++step) {
    std::set<std::vector<unsigned>> next;
    std::string level = std::to_string(step / 2) + (step % 2 == 0 ? "+1/2" : "");
    if (step % 2) level = std::to_string(step / 2 + 1);
    for (const auto& lam : prev) {
      std::vector<std::vector<unsigned>> targets{lam};
      for (std::size_t i = 0; i <= lam.size(); ++i) {
        auto v = lam;
        if (step % 2 == 0) {
          if (i == lam.size() || (i + 1 < lam.size() && lam[i + 1] == lam[i])) continue;
          if (--v[i] == 0) v.pop_back();
        } else {
          if (i == lam.size()) v.push_back(1);
          else if (i > 0 && lam[i - 1] == lam[i]) continue;
          else ++v[i];
        }
        targets.push_back(v);
      }
      for (const auto& t : targets) {
        next.insert(t);
        edges.push_back({{"from", text(lam)}, {"to", text(t)}, {"level", level}});
      }
    }
    json vs = json::array();
    for (const auto& p : next) vs.push_back(text(p));
    levels.push_back({{"level", level}, {"vertices", vs}});
    prev.assign(next.begin(), next.end());
  }
  return json{{"levels", levels}, {"edges", edges}};
}

int cmd_graph(const std::string& kind, const std::string& fam, unsigned n, bool dot,
              const std::string& out_path) {
  std::string text;
  if (kind == "projection") {
    auto g = projection_graph(parse_family(fam), n);
    text = dot ? to_dot(g) : to_json(g).dump(2) + "\n";
  } else {
    if (dot) throw std::invalid_argument("DOT output is only available for projection graphs");
    if (kind == "graham-houghton") {
      Family f = parse_family(fam);
      int top = top_singular_rank(f, n);
      if (top < 0) throw std::invalid_argument("no singular J-class");
      text = to_json(graham_houghton(f, n, static_cast<unsigned>(top))).dump(2) + "\n";
    } else if (kind == "johnson") {
      text = to_json(johnson_graph(n)).dump(2) + "\n";
    } else if (kind == "bratteli") {
      text = bratteli_json(n).dump(2) + "\n";
    } else {
      throw std::invalid_argument("unknown graph kind: " + kind);
    }
  }
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open " + out_path);
    f << text;
  }
  return kTrue;
}

int cmd_dims(const std::string& algebra, unsigned n, const std::optional<std::string>& mu_text) {
  std::cout << (algebra == "tl" ? "r,dim\n" : "mu,dim\n");
  if (algebra == "tl") {
    std::vector<unsigned> rs;
    if (mu_text) rs.push_back(IntegerPartition::parse(*mu_text).size());
    else
      for (unsigned r = n % 2; r <= n; r += 2) rs.push_back(r);
    for (unsigned r : rs) std::cout << r << ',' << to_string(dim_tl_algebra(n, r)) << '\n';
    return kTrue;
  }
  if (algebra != "partition" && algebra != "brauer")
    throw std::invalid_argument("unknown algebra: " + algebra);
  std::vector<IntegerPartition> mus;
  if (mu_text) {
    mus.push_back(IntegerPartition::parse(*mu_text));
  } else {
    for (unsigned m = n + 1; m-- > 0;) {
      if (algebra == "brauer" && (n - m) % 2) continue;
      for (auto& p : partitions_of(m)) mus.push_back(p);
    }
  }
  for (const auto& mu : mus) {
    BigCount d = algebra == "partition" ? dim_partition_algebra(n, mu) : dim_brauer_algebra(n, mu);
    std::cout << '"' << mu.to_string() << "\"," << to_string(d) << '\n';
  }
  return kTrue;
}

std::pair<unsigned, unsigned> parse_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) {
    unsigned v = static_cast<unsigned>(std::stoul(s));
    return {v, v};
  }
  return {static_cast<unsigned>(std::stoul(s.substr(0, dots))),
          static_cast<unsigned>(std::stoul(s.substr(dots + 2)))};
}

int cmd_verify(const std::string& id, const std::string& range) {
  auto [lo, hi] = parse_range(range);
  auto records = verify_theorem(id, lo, hi);
  bool ok = true;
  for (const auto& r : records) {
    std::cout << to_json(r).dump() << '\n';
    ok = ok && r.pass;
  }
  return ok ? kTrue : kFalse;
}

int cmd_count(const Options& o, const std::string& what, const std::string& fam, unsigned n,
              std::optional<unsigned> r) {
  BigCount v;
  if (what == "tournaments") {
    v = strong_tournaments_w(n);
  } else {
    Family f = parse_family(fam);
    if (what == "size") v = family_size(f, n);
    else if (what == "rank") {
      if (!r) throw std::invalid_argument("count rank needs --r");
      v = rank_ideal(f, n, *r);
    } else if (what == "balanced") v = balanced_subgraph_count(projection_graph(f, n));
    else if (what == "min-idgen") v = brute_min_idgen_count(f, n);
    else if (what == "idgen-subsets") v = brute_idgen_subset_count(f, n);
    else if (what == "idempotents") {
      int top = top_singular_rank(f, n);
      std::uint64_t c = 0;
      for (const auto& a : enumerate_diagrams(f, n))
        if (static_cast<int>(rank(a)) == (r ? static_cast<int>(*r) : top) && is_idempotent(a)) ++c;
      v = BigCount(static_cast<unsigned long>(c));
    } else throw std::invalid_argument("unknown count: " + what);
  }
  if (o.format == "json") std::cout << json{{"count", what}, {"n", n}, {"value", to_string(v)}}.dump() << '\n';
  else std::cout << to_string(v) << '\n';
  return kTrue;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Diagram monoid calculator"};
  app.fallthrough();
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "ascii, csv or json")
      ->check(CLI::IsMember({"ascii", "csv", "json"}));
  app.add_option("--seed", opt.seed, "accepted and ignored");

  int table_id = 0;
  std::optional<unsigned> max_n;
  auto* tables = app.add_subcommand("tables", "print a table of values");
  tables->add_option("id", table_id, "table number 1..11")->required();
  tables->add_option("--max-n", max_n, "last index to print");

  unsigned cn = 0;
  std::string da, db;
  auto* compose_cmd = app.add_subcommand("compose", "compose two diagrams");
  compose_cmd->add_option("n", cn)->required();
  compose_cmd->add_option("a", da)->required();
  compose_cmd->add_option("b", db)->required();

  std::string kind, fam, spec;
  unsigned n = 0;
  auto* check = app.add_subcommand("check", "test a generation criterion");
  check->add_option("kind", kind, "rbr, red-circuit, closure, tournament or strong-hall")->required();
  check->add_option("family", fam)->required();
  check->add_option("n", n)->required();
  check->add_option("set", spec, "comma-separated generator names");

  bool dot = false, as_json = false;
  std::string out_path;
  auto* graph = app.add_subcommand("graph", "export a graph");
  graph->add_option("kind", kind, "projection, graham-houghton, johnson or bratteli")->required();
  graph->add_option("family_or_n", fam)->required();
  graph->add_option("n", n);
  graph->add_flag("--dot", dot);
  graph->add_flag("--json", as_json);
  graph->add_option("-o,--output", out_path);

  std::string algebra;
  std::optional<std::string> mu;
  auto* dims = app.add_subcommand("dims", "cell module dimensions");
  dims->add_option("--algebra", algebra, "partition, brauer or tl")->required();
  dims->add_option("--n", n)->required();
  dims->add_option("--mu", mu);

  std::string theorem, range = "2..4";
  auto* verify = app.add_subcommand("verify", "check a result over a range of n");
  verify->add_option("id", theorem)->required();
  verify->add_option("range", range, "N or LO..HI");

  std::string what;
  std::optional<unsigned> cr;
  auto* count = app.add_subcommand("count", "count a quantity");
  count->add_option("what", what,
                    "size, rank, balanced, min-idgen, idgen-subsets, idempotents or tournaments")
      ->required();
  count->add_option("--family", fam);
  count->add_option("--n", n)->required();
  count->add_option("--r", cr);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*tables) {
      std::cout << render(make_table(table_id, max_n), parse_table_format(opt.format));
      return kTrue;
    }
    if (*compose_cmd) {
      auto c = compose(parse_diagram(da, cn), parse_diagram(db, cn));
      if (opt.format == "json")
        std::cout << json{{"product", c.product.to_string()}, {"m", c.m}}.dump() << '\n';
      else std::cout << c.product.to_string() << "\nm=" << c.m << '\n';
      return kTrue;
    }
    if (*check) return cmd_check(opt, kind, fam, n, spec);
    if (*graph) {
      if (kind == "johnson" || kind == "bratteli") {
        n = static_cast<unsigned>(std::stoul(fam));
        fam.clear();
      } else if (graph->count("n") == 0) {
        throw std::invalid_argument("graph needs a family and n");
      }
      return cmd_graph(kind, fam, n, dot, out_path);
    }
    if (*dims) return cmd_dims(algebra, n, mu);
    if (*verify) return cmd_verify(theorem, range);
    if (*count) return cmd_count(opt, what, fam, n, cr);
  } catch (const GuardExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
