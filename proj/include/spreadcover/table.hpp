#pragma once

#include <string>
#include <vector>

#include "spreadcover/exact.hpp"

namespace spreadcover {

enum class TableColumn { Ggr, Hw, Greedy, ExactAlpha, ExactRho, Alpha4 };

enum class TableFormat { Text, Csv, Json };

// Layout of a bound-comparison table: one row per degree, one column per
// requested bound. The greedy column is labeled "4.1" to line up with the
// published tables.
struct TableSpec {
    int n = 4;
    int d_min = 0;
    int d_max = 0;
    std::vector<TableColumn> columns;
    TableFormat format = TableFormat::Text;
    SearchLimits limits;
};

const char* table_column_label(TableColumn c);
TableColumn parse_table_column(const std::string& name);

// Renders the table; cells whose bound does not apply at that (n, d) are
// printed as an em dash.
std::string emit_table(const TableSpec& spec);

} // namespace spreadcover
