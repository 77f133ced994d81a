#ifndef DIAGMON_TABLES_HPP
#define DIAGMON_TABLES_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace diagmon {

enum class TableFormat { Ascii, Csv, Json };

TableFormat parse_table_format(const std::string& s);

// One rendered table. An empty cell is blank; "?" marks an unknown value.
struct Table {
  int id = 0;
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// id in 1..11. max_n drops rows (or columns, for single-row tables)
// indexed beyond it.
Table make_table(int id, std::optional<unsigned> max_n = std::nullopt);

std::string render(const Table& t, TableFormat fmt);
nlohmann::json to_json(const Table& t);

}  // namespace diagmon

#endif
