#ifndef DIAGMON_TESTS_GOLDEN_TABLES_HPP
#define DIAGMON_TESTS_GOLDEN_TABLES_HPP

#include <map>
#include <string>
#include <vector>

// Tables as printed; the first row is the header, blank cells are empty.
inline const std::map<int, std::vector<std::vector<std::string>>>& golden_tables() {
  static const std::map<int, std::vector<std::vector<std::string>>> t = {
      {1,
       {
           {"n", "1", "2", "3", "4", "5", "6", "7", "8", "9", "10"},
           {"w_n", "1", "0", "2", "24", "544", "22320", "1677488", "236522496", "64026088576", "33832910196480"},
       }},
      {2,
       {
           {"n\\r", "1", "2", "3", "4", "5", "6", "7", "8", "9", "10"},
           {"1", "1", "", "", "", "", "", "", "", "", ""},
           {"2", "1", "1", "", "", "", "", "", "", "", ""},
           {"3", "1", "3", "1", "", "", "", "", "", "", ""},
           {"4", "1", "7", "6", "1", "", "", "", "", "", ""},
           {"5", "1", "15", "25", "10", "1", "", "", "", "", ""},
           {"6", "1", "31", "90", "65", "15", "1", "", "", "", ""},
           {"7", "1", "63", "301", "350", "140", "21", "1", "", "", ""},
           {"8", "1", "127", "966", "1701", "1050", "266", "28", "1", "", ""},
           {"9", "1", "255", "3025", "7770", "6951", "2646", "462", "36", "1", ""},
           {"10", "1", "511", "9330", "34105", "42525", "22827", "5880", "750", "45", "1"},
       }},
      {3,
       {
           {"n\\r", "0", "1", "2", "3", "4", "5", "6", "7", "8", "9"},
           {"1", "1", "", "", "", "", "", "", "", "", ""},
           {"2", "2", "3", "", "", "", "", "", "", "", ""},
           {"3", "5", "10", "6", "", "", "", "", "", "", ""},
           {"4", "15", "37", "31", "10", "", "", "", "", "", ""},
           {"5", "52", "151", "160", "75", "15", "", "", "", "", ""},
           {"6", "203", "674", "856", "520", "155", "21", "", "", "", ""},
           {"7", "877", "3263", "4802", "3556", "1400", "287", "28", "", "", ""},
           {"8", "4140", "17007", "28337", "24626", "11991", "3290", "490", "36", "", ""},
           {"9", "21147", "94828", "175896", "174805", "101031", "34671", "6972", "786", "45", ""},
           {"10", "115975", "562595", "1146931", "1279240", "853315", "350889", "88977", "13620", "1200", "55"},
       }},
      {4,
       {
           {"k", "0", "1", "2", "3", "4", "5", "6", "7", "8", "9", "10"},
           {"a_k", "1", "0", "0", "2", "6", "24", "160", "1140", "8988", "80864", "809856"},
       }},
      {5,
       {
           {"n\\k", "0", "1", "2", "3", "4", "5", "6", "7", "8", "9", "10"},
           {"0", "1", "", "", "", "", "", "", "", "", "", ""},
           {"1", "1", "1", "", "", "", "", "", "", "", "", ""},
           {"2", "1", "2", "3", "", "", "", "", "", "", "", ""},
           {"3", "1", "3", "8", "18", "", "", "", "", "", "", ""},
           {"4", "1", "4", "15", "52", "163", "", "", "", "", "", ""},
           {"5", "1", "5", "24", "110", "478", "1950", "", "", "", "", ""},
           {"6", "1", "6", "35", "198", "1083", "5706", "28821", "", "", "", ""},
           {"7", "1", "7", "48", "322", "2110", "13482", "83824", "505876", "", "", ""},
           {"8", "1", "8", "63", "488", "3715", "27768", "203569", "1461944", "10270569", "", ""},
           {"9", "1", "9", "80", "702", "6078", "51894", "436656", "3618540", "29510268", "236644092", ""},
           {"10", "1", "10", "99", "970", "9403", "90150", "854485", "8003950", "74058105", "676549450", "6098971555"},
       }},
      {6,
       {
           {"n", "0", "1", "2", "3", "4", "5", "6", "7", "8", "9", "10"},
           {"|G_n|", "1", "1", "3", "20", "201", "2604", "40915", "754368", "15960945", "381141008", "10139372451"},
       }},
      {7,
       {
           {"n", "2", "3", "4", "5", "6", "7"},
           {"c_n", "1", "2", "12", "288", "34560", "24883200"},
           {"d_n", "1", "6", "265", "126140", "855966411", "?"},
           {"e_n", "0", "2", "265", "1334961", "481066515734", "895014631192902121"},
       }},
      {8,
       {
           {"n\\r", "0", "1", "2", "3", "4", "5", "6", "7", "8"},
           {"2", "1", "", "", "", "", "", "", "", ""},
           {"3", "", "3", "", "", "", "", "", "", ""},
           {"4", "3", "", "6", "", "", "", "", "", ""},
           {"5", "", "15", "", "10", "", "", "", "", ""},
           {"6", "15", "", "45", "", "15", "", "", "", ""},
           {"7", "", "105", "", "105", "", "21", "", "", ""},
           {"8", "105", "", "420", "", "210", "", "28", "", ""},
           {"9", "", "945", "", "1260", "", "378", "", "36", ""},
           {"10", "945", "", "4725", "", "3150", "", "630", "", "45"},
       }},
      {9,
       {
           {"n\\r", "0", "1", "2", "3", "4", "5", "6", "7", "8", "9", "10"},
           {"0", "1", "", "", "", "", "", "", "", "", "", ""},
           {"1", "", "1", "", "", "", "", "", "", "", "", ""},
           {"2", "1", "", "1", "", "", "", "", "", "", "", ""},
           {"3", "", "2", "", "1", "", "", "", "", "", "", ""},
           {"4", "2", "", "3", "", "1", "", "", "", "", "", ""},
           {"5", "", "5", "", "4", "", "1", "", "", "", "", ""},
           {"6", "5", "", "9", "", "5", "", "1", "", "", "", ""},
           {"7", "", "14", "", "14", "", "6", "", "1", "", "", ""},
           {"8", "14", "", "28", "", "20", "", "7", "", "1", "", ""},
           {"9", "", "42", "", "48", "", "27", "", "8", "", "1", ""},
           {"10", "42", "", "90", "", "75", "", "35", "", "9", "", "1"},
       }},
      {10,
       {
           {"n", "1", "2", "3", "4", "5", "6", "7", "8", "9", "10"},
           {"F_n", "1", "1", "2", "3", "5", "8", "13", "21", "34", "55"},
       }},
      {11,
       {
           {"n", "2", "3", "4", "5", "6", "7", "8", "9", "10"},
           {"f_n", "1", "7", "41", "247", "1481", "8887", "53321", "319927", "1919561"},
       }},
  };
  return t;
}

#endif
