#include "diagmon/tables.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "diagmon/counting.hpp"
#include "diagmon/graphs.hpp"

namespace diagmon {

namespace {

constexpr unsigned kPrintedMax = 10;

using Cell = std::function<std::optional<BigCount>(unsigned, unsigned)>;

std::string cell_text(const std::optional<BigCount>& v) { return v ? to_string(*v) : std::string(); }

// A triangle or grid indexed by n (rows) and r (columns).
Table grid(int id, std::string title, std::string corner, unsigned n0, unsigned n1, unsigned r0,
           unsigned r1, const Cell& cell, std::optional<unsigned> max_n) {
  Table t{id, std::move(title), {std::move(corner)}, {}};
  unsigned last = max_n ? std::min(n1, *max_n) : n1;
  unsigned rlast = max_n ? std::min(r1, *max_n) : r1;
  for (unsigned r = r0; r <= rlast; ++r) t.header.push_back(std::to_string(r));
  for (unsigned n = n0; n <= last; ++n) {
    std::vector<std::string> row{std::to_string(n)};
    for (unsigned r = r0; r <= rlast; ++r) row.push_back(cell_text(cell(n, r)));
    t.rows.push_back(std::move(row));
  }
  return t;
}

// A single sequence laid out as one row.
Table sequence(int id, std::string title, std::string index, std::string name, unsigned n0,
               unsigned n1, const std::function<std::string(unsigned)>& value,
               std::optional<unsigned> max_n) {
  Table t{id, std::move(title), {std::move(index)}, {{std::move(name)}}};
  unsigned last = max_n ? std::min(n1, *max_n) : n1;
  for (unsigned n = n0; n <= last; ++n) {
    t.header.push_back(std::to_string(n));
    t.rows[0].push_back(value(n));
  }
  return t;
}

std::string brauer_d(unsigned n) {
  if (n > 6) return "?";
  return to_string(balanced_subgraph_count(projection_graph(Family::Brauer, n)));
}

}  // namespace

TableFormat parse_table_format(const std::string& s) {
  if (s == "ascii") return TableFormat::Ascii;
  if (s == "csv") return TableFormat::Csv;
  if (s == "json") return TableFormat::Json;
  throw std::invalid_argument("unknown format: " + s);
}

Table make_table(int id, std::optional<unsigned> max_n) {
  auto big = [](auto fn) { return [fn](unsigned n) { return to_string(fn(n)); }; };
  switch (id) {
    case 1:
      return sequence(1, "strongly connected tournaments w_n", "n", "w_n", 1, kPrintedMax,
                      big(strong_tournaments_w), max_n);
    case 2:
      return grid(2, "Stirling numbers S(n,r)", "n\\r", 1, kPrintedMax, 1, kPrintedMax,
                  [](unsigned n, unsigned r) -> std::optional<BigCount> {
                    if (r > n) return std::nullopt;
                    return stirling2(n, r);
                  },
                  max_n);
    case 3:
      return grid(3, "rank(I_r(P_n))", "n\\r", 1, kPrintedMax, 0, kPrintedMax - 1,
                  [](unsigned n, unsigned r) -> std::optional<BigCount> {
                    if (r + 1 > n) return std::nullopt;
                    return rank_ideal(Family::Partition, n, r);
                  },
                  max_n);
    case 4:
      return sequence(4, "a_k", "k", "a_k", 0, kPrintedMax, big(partition_a), max_n);
    case 5:
      return grid(5, "b_nk", "n\\k", 0, kPrintedMax, 0, kPrintedMax,
                  [](unsigned n, unsigned k) -> std::optional<BigCount> {
                    if (k > n) return std::nullopt;
                    return partition_b(n, k);
                  },
                  max_n);
    case 6:
      return sequence(6, "minimal idempotent generating sets of P_n \\ S_n", "n", "|G_n|", 0,
                      kPrintedMax, big(partition_gsets), max_n);
    case 7: {
      Table t{7, "bounds and counts for B_n \\ S_n", {"n"}, {{"c_n"}, {"d_n"}, {"e_n"}}};
      unsigned last = max_n ? std::min(7u, *max_n) : 7u;
      for (unsigned n = 2; n <= last; ++n) {
        auto b = brauer_bounds(n);
        t.header.push_back(std::to_string(n));
        t.rows[0].push_back(to_string(b.c));
        t.rows[1].push_back(brauer_d(n));
        t.rows[2].push_back(to_string(b.e));
      }
      return t;
    }
    case 8:
      return grid(8, "rank(I_r(B_n))", "n\\r", 2, kPrintedMax, 0, kPrintedMax - 2,
                  [](unsigned n, unsigned r) -> std::optional<BigCount> {
                    if (r + 2 > n || (n - r) % 2) return std::nullopt;
                    return rank_ideal(Family::Brauer, n, r);
                  },
                  max_n);
    case 9:
      return grid(9, "rho_nr", "n\\r", 0, kPrintedMax, 0, kPrintedMax,
                  [](unsigned n, unsigned r) -> std::optional<BigCount> {
                    if (r > n || (n - r) % 2) return std::nullopt;
                    return jones_rho(n, r);
                  },
                  max_n);
    case 10:
      return sequence(10, "Fibonacci numbers F_n", "n", "F_n", 1, kPrintedMax, big(fibonacci),
                      max_n);
    case 11:
      return sequence(11, "idempotent generating sets f_n of J_n \\ {1}", "n", "f_n", 2,
                      kPrintedMax, big(jones_f), max_n);
    default:
      throw std::invalid_argument("unknown table: " + std::to_string(id));
  }
}

nlohmann::json to_json(const Table& t) {
  nlohmann::json j;
  j["table"] = t.id;
  j["title"] = t.title;
  j["header"] = t.header;
  j["rows"] = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& c : row) r.push_back(c.empty() ? nlohmann::json(nullptr) : nlohmann::json(c));
    j["rows"].push_back(r);
  }
  return j;
}

std::string render(const Table& t, TableFormat fmt) {
  std::ostringstream os;
  switch (fmt) {
    case TableFormat::Json:
      os << to_json(t).dump() << '\n';
      break;
    case TableFormat::Csv: {
      auto line = [&os](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
        os << '\n';
      };
      line(t.header);
      for (const auto& row : t.rows) line(row);
      break;
    }
    case TableFormat::Ascii: {
      std::vector<std::size_t> width(t.header.size(), 0);
      auto widen = [&width](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) width[i] = std::max(width[i], cells[i].size());
      };
      widen(t.header);
      for (const auto& row : t.rows) widen(row);
      auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t i = 0; i < cells.size(); ++i) {
          if (i) s += i == 1 ? " | " : "  ";
          s += std::string(width[i] - cells[i].size(), ' ') + cells[i];
        }
        while (!s.empty() && s.back() == ' ') s.pop_back();
        os << s << '\n';
      };
      os << "Table " << t.id << ": " << t.title << '\n';
      line(t.header);
      std::size_t total = 0;
      for (std::size_t i = 0; i < width.size(); ++i) total += width[i] + (i == 0 ? 0 : i == 1 ? 3 : 2);
      os << std::string(total, '-') << '\n';
      for (const auto& row : t.rows) line(row);
      break;
    }
  }
  return os.str();
}

}  // namespace diagmon
