#pragma once

#include <iosfwd>
#include <vector>

#include "treq/relation.hpp"

namespace treq {

enum class TableFormat { csv, json };

// The four class-count tables: 1 = depth, 2 = left depth,
// 3 = weighted depth, 4 = grid congruence.
struct TableRequest {
  int table;
  int max_n;
  TableFormat format = TableFormat::csv;
};

struct TableRow {
  std::vector<long long> params;
  RelationSpec relation;
};

// Parameter rows in publication order.
std::vector<TableRow> table_rows(int table);

// Column names preceding "n,count" in the CSV header.
const char* table_param_names(int table);

void emit_table(const TableRequest& req, std::ostream& out, int threads = 0,
                int guard = kLeafGuard);

}  // namespace treq
