#include "treq/tables.hpp"

#include <array>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace treq {

namespace {

// Weighted-depth parameter triples (a, b, m), one per distinct sequence,
// in publication order.
constexpr std::array<std::array<long long, 3>, 93> kWeightedRows{{
    {1, 1, 1},   {1, 2, 2},   {1, 1, 2},   {1, 3, 3},   {1, 4, 4},
    {2, 3, 6},   {1, 2, 3},   {1, 1, 3},   {1, 2, 4},   {1, 5, 5},
    {1, 6, 6},   {2, 5, 10},  {3, 4, 12},  {1, 3, 4},   {1, 1, 4},
    {1, 3, 6},   {1, 7, 7},   {1, 2, 6},   {1, 4, 6},   {1, 8, 8},
    {2, 7, 14},  {1, 4, 5},   {1, 1, 5},   {1, 2, 5},   {1, 4, 8},
    {1, 9, 9},   {2, 3, 12},  {1, 10, 10}, {1, 5, 6},   {1, 1, 6},
    {1, 2, 8},   {1, 3, 9},   {1, 5, 10},  {1, 6, 8},   {1, 6, 9},
    {1, 11, 11}, {1, 12, 12}, {1, 1, 7},   {1, 1, 8},   {1, 1, 9},
    {1, 1, 10},  {1, 1, 11},  {1, 1, 12},  {1, 1, 13},  {1, 1, 14},
    {1, 2, 7},   {1, 2, 9},   {1, 2, 10},  {1, 2, 11},  {1, 2, 12},
    {1, 2, 13},  {1, 2, 14},  {1, 3, 7},   {1, 3, 8},   {1, 3, 10},
    {1, 3, 11},  {1, 3, 12},  {1, 3, 13},  {1, 3, 14},  {1, 4, 9},
    {1, 4, 10},  {1, 4, 12},  {1, 4, 13},  {1, 4, 14},  {1, 5, 8},
    {1, 5, 11},  {1, 5, 12},  {1, 5, 13},  {1, 6, 7},   {1, 6, 10},
    {1, 6, 12},  {1, 6, 13},  {1, 6, 14},  {1, 7, 8},   {1, 7, 11},
    {1, 7, 12},  {1, 7, 14},  {1, 8, 9},   {1, 8, 10},  {1, 8, 12},
    {1, 8, 14},  {1, 9, 10},  {1, 9, 12},  {1, 9, 14},  {1, 10, 11},
    {1, 10, 12}, {1, 10, 14}, {1, 11, 12}, {1, 12, 13}, {1, 12, 14},
    {1, 13, 13}, {1, 13, 14}, {1, 14, 14},
}};

}  // namespace

std::vector<TableRow> table_rows(int table) {
  std::vector<TableRow> rows;
  switch (table) {
    case 1:
      for (long long k = 1; k <= 8; ++k) {
        rows.push_back({{k}, RelationSpec::depth(k)});
      }
      break;
    case 2:
      for (long long k = 1; k <= 15; ++k) {
        rows.push_back({{k}, RelationSpec::left(k)});
      }
      break;
    case 3:
      for (const auto& [a, b, m] : kWeightedRows) {
        rows.push_back({{a, b, m}, RelationSpec::weighted(a, b, m)});
      }
      break;
    case 4:
      for (long long w = 1; w <= 5; ++w) {
        for (long long v = 1; v <= 5; ++v) {
          for (long long u = 0; u < w; ++u) {
            rows.push_back(
                {{u, v, w}, RelationSpec::from_grid(Grid::lattice(u, v, w))});
          }
        }
      }
      break;
    default:
      throw std::invalid_argument("table must be 1, 2, 3 or 4");
  }
  return rows;
}

const char* table_param_names(int table) {
  switch (table) {
    case 1:
    case 2:
      return "k";
    case 3:
      return "a,b,m";
    case 4:
      return "u,v,w";
    default:
      throw std::invalid_argument("table must be 1, 2, 3 or 4");
  }
}

void emit_table(const TableRequest& req, std::ostream& out, int threads,
                int guard) {
  if (req.max_n < 1) throw std::invalid_argument("table range must be positive");
  std::vector<TableRow> rows = table_rows(req.table);

  if (req.format == TableFormat::csv) {
    out << table_param_names(req.table) << ",n,count\n";
    for (const TableRow& row : rows) {
      for (int n = 1; n <= req.max_n; ++n) {
        for (long long param : row.params) out << param << ',';
        out << n << ',' << count_classes(n, row.relation, threads, guard) << '\n';
      }
    }
    return;
  }

  nlohmann::ordered_json doc;
  doc["table"] = req.table;
  doc["max_n"] = req.max_n;
  doc["rows"] = nlohmann::ordered_json::array();
  const char* names = table_param_names(req.table);
  for (const TableRow& row : rows) {
    nlohmann::ordered_json entry;
    const char* name = names;
    for (long long param : row.params) {
      std::string key(1, *name);
      entry[key] = param;
      name += 2;  // step over the comma in "a,b,m"
    }
    auto& sequence = entry["sequence"];
    sequence = nlohmann::ordered_json::array();
    for (int n = 1; n <= req.max_n; ++n) {
      sequence.push_back(
          static_cast<std::uint64_t>(count_classes(n, row.relation, threads, guard)
                                         .get_ui()));
    }
    doc["rows"].push_back(std::move(entry));
  }
  out << doc.dump(2) << '\n';
}

}  // namespace treq
