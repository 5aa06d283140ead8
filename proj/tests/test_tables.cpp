#include "treq/tables.hpp"

#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "treq/errors.hpp"

using namespace treq;

namespace {

std::string emit(int table, int max_n, TableFormat format, int threads = 0) {
  std::ostringstream out;
  emit_table(TableRequest{table, max_n, format}, out, threads);
  return out.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("table parameter rows") {
  CHECK(table_rows(1).size() == 8);
  CHECK(table_rows(2).size() == 15);
  CHECK(table_rows(3).size() == 93);
  CHECK(table_rows(4).size() == 75);

  CHECK(table_rows(1)[0].params == std::vector<long long>{1});
  CHECK(table_rows(2)[14].params == std::vector<long long>{15});
  CHECK(table_rows(3)[0].params == std::vector<long long>{1, 1, 1});
  CHECK(table_rows(3)[5].params == std::vector<long long>{2, 3, 6});
  CHECK(table_rows(3)[92].params == std::vector<long long>{1, 14, 14});
  CHECK(table_rows(4)[0].params == std::vector<long long>{0, 1, 1});
  CHECK(table_rows(4)[1].params == std::vector<long long>{0, 2, 1});
  CHECK(table_rows(4)[74].params == std::vector<long long>{4, 5, 5});

  CHECK(std::string(table_param_names(1)) == "k");
  CHECK(std::string(table_param_names(3)) == "a,b,m");
  CHECK(std::string(table_param_names(4)) == "u,v,w");
  CHECK_THROWS_AS(table_rows(5), std::invalid_argument);
  CHECK_THROWS_AS(table_param_names(0), std::invalid_argument);
}

TEST_CASE("csv emission") {
  std::string text = emit(1, 7, TableFormat::csv);
  std::vector<std::string> lines = lines_of(text);
  REQUIRE(lines.size() == 1 + 8 * 7);
  CHECK(lines[0] == "k,n,count");
  CHECK(lines[1] == "1,1,1");
  CHECK(lines[7] == "1,7,1");
  CHECK(lines[2 * 7 + 7] == "3,7,129");
  CHECK(text.back() == '\n');

  std::vector<std::string> t3 = lines_of(emit(3, 1, TableFormat::csv));
  REQUIRE(t3.size() == 94);
  CHECK(t3[0] == "a,b,m,n,count");
  CHECK(t3[1] == "1,1,1,1,1");
  CHECK(t3[6] == "2,3,6,1,1");

  std::string t4 = emit(4, 5, TableFormat::csv);
  CHECK(lines_of(t4)[0] == "u,v,w,n,count");
  CHECK(t4.find("0,1,1,5,1\n") != std::string::npos);
  CHECK(t4.find("0,1,2,5,8\n") != std::string::npos);
}

TEST_CASE("json emission") {
  std::string text = emit(1, 6, TableFormat::json);
  nlohmann::json doc = nlohmann::json::parse(text);
  CHECK(doc["table"] == 1);
  CHECK(doc["max_n"] == 6);
  REQUIRE(doc["rows"].size() == 8);
  CHECK(doc["rows"][2]["k"] == 3);
  CHECK(doc["rows"][2]["sequence"] ==
        nlohmann::json::array({1, 1, 2, 5, 14, 42}));
  CHECK(doc["rows"][0]["sequence"] == nlohmann::json::array({1, 1, 1, 1, 1, 1}));

  nlohmann::json t3 = nlohmann::json::parse(emit(3, 2, TableFormat::json));
  REQUIRE(t3["rows"].size() == 93);
  CHECK(t3["rows"][5]["a"] == 2);
  CHECK(t3["rows"][5]["b"] == 3);
  CHECK(t3["rows"][5]["m"] == 6);
  CHECK(t3["rows"][5]["sequence"].size() == 2);

  // Parameter keys come before the sequence, in declaration order.
  std::string flat = emit(3, 1, TableFormat::json);
  std::size_t a_pos = flat.find("\"a\"");
  std::size_t m_pos = flat.find("\"m\"");
  std::size_t seq_pos = flat.find("\"sequence\"");
  CHECK(a_pos < m_pos);
  CHECK(m_pos < seq_pos);
}

TEST_CASE("emission is deterministic") {
  CHECK(emit(1, 8, TableFormat::csv, 1) == emit(1, 8, TableFormat::csv, 3));
  CHECK(emit(4, 6, TableFormat::csv, 1) == emit(4, 6, TableFormat::csv, 0));
  CHECK(emit(2, 6, TableFormat::json, 1) == emit(2, 6, TableFormat::json, 4));
  CHECK(emit(1, 7, TableFormat::csv) == emit(1, 7, TableFormat::csv));
}

TEST_CASE("table guards") {
  std::ostringstream out;
  CHECK_THROWS_AS(emit_table(TableRequest{1, 0, TableFormat::csv}, out),
                  std::invalid_argument);
  CHECK_THROWS_AS(emit_table(TableRequest{1, kLeafGuard + 1, TableFormat::csv}, out),
                  GuardError);
  CHECK_THROWS_AS(emit_table(TableRequest{9, 5, TableFormat::csv}, out),
                  std::invalid_argument);
}
