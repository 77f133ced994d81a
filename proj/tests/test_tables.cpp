#include "doctest.h"

#include "diagmon/tables.hpp"

using namespace diagmon;

TEST_CASE("table contents") {
  auto t3 = make_table(3);
  REQUIRE(t3.rows.size() == 10);
  CHECK(t3.rows[7] == std::vector<std::string>{"8", "4140", "17007", "28337", "24626", "11991", "3290",
                                                "490", "36", "", ""});
  auto t10 = make_table(10);
  CHECK(t10.rows[0] ==
        std::vector<std::string>{"F_n", "1", "1", "2", "3", "5", "8", "13", "21", "34", "55"});
  auto t1 = make_table(1, 3u);
  CHECK(t1.rows[0] == std::vector<std::string>{"w_n", "1", "0", "2"});
  auto t7 = make_table(7);
  CHECK(std::vector<std::string>(t7.rows[1].begin(), t7.rows[1].begin() + 5) ==
        std::vector<std::string>{"d_n", "1", "6", "265", "126140"});
  CHECK(t7.rows[1][5] == "855966441");
  CHECK(t7.rows[1][6] == "?");
  CHECK_THROWS_AS(make_table(12), std::invalid_argument);
}

TEST_CASE("rendering") {
  auto t = make_table(1, 3u);
  CHECK(render(t, TableFormat::Csv) == "n,1,2,3\nw_n,1,0,2\n");
  CHECK(render(t, TableFormat::Json) ==
        R"({"header":["n","1","2","3"],"rows":[["w_n","1","0","2"]],"table":1,"title":"strongly connected tournaments w_n"})"
        "\n");
  auto ascii = render(t, TableFormat::Ascii);
  CHECK(ascii.find("Table 1") == 0);
  CHECK(ascii.find("w_n | 1  0  2") != std::string::npos);
  CHECK(render(make_table(9), TableFormat::Csv).find("\n1,,1,,,,,,,,,\n") != std::string::npos);
  CHECK_THROWS_AS(parse_table_format("xml"), std::invalid_argument);
}
