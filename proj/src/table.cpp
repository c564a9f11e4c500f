#include "spreadcover/table.hpp"

#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "spreadcover/bounds.hpp"

namespace spreadcover {

const char* table_column_label(TableColumn c) {
    switch (c) {
        case TableColumn::Ggr: return "GGR";
        case TableColumn::Hw: return "HW";
        case TableColumn::Greedy: return "4.1";
        case TableColumn::ExactAlpha: return "exact_alpha";
        case TableColumn::ExactRho: return "exact_rho";
        case TableColumn::Alpha4: return "alpha4";
    }
    return "?";
}

TableColumn parse_table_column(const std::string& name) {
    if (name == "GGR" || name == "ggr") return TableColumn::Ggr;
    if (name == "HW" || name == "hw") return TableColumn::Hw;
    if (name == "greedy" || name == "4.1") return TableColumn::Greedy;
    if (name == "exact_alpha") return TableColumn::ExactAlpha;
    if (name == "exact_rho") return TableColumn::ExactRho;
    if (name == "alpha4") return TableColumn::Alpha4;
    throw std::invalid_argument("unknown table column '" + name + "'");
}

namespace {

constexpr const char* kDash = "—";

std::optional<std::int64_t> cell_value(TableColumn col, int n, int d,
                                       const SearchLimits& lim) {
    switch (col) {
        case TableColumn::Ggr:
            if (n < 2 || d < 2) return std::nullopt;
            return ggr_bounds(n, d).rho_upper;
        case TableColumn::Hw:
            if (n != 4 || d < 5) return std::nullopt;
            return hw_upper(d);
        case TableColumn::Greedy:
            if (n < 2 || d < 1 || num_monomials(n, d) > lim.max_vertices)
                return std::nullopt;
            return greedy_cover(n, d, lim.max_vertices).size();
        case TableColumn::ExactAlpha: {
            if (num_monomials(n, d) > lim.max_vertices) return std::nullopt;
            MonomialGraph g(n, d, lim.max_vertices);
            ExactAlphaResult r = max_independent_set(g, lim);
            if (!r.proven_optimal) return std::nullopt;
            return r.value;
        }
        case TableColumn::ExactRho: {
            if (d < 1 || num_monomials(n, d) > lim.max_vertices) return std::nullopt;
            ExactRhoResult r = min_upward_clique_cover(n, d, lim);
            if (!r.proven_optimal) return std::nullopt;
            return r.value;
        }
        case TableColumn::Alpha4:
            if (n != 4) return std::nullopt;
            return alpha4_exact(d);
    }
    return std::nullopt;
}

} // namespace

std::string emit_table(const TableSpec& spec) {
    if (spec.d_min > spec.d_max) throw std::invalid_argument("empty degree range");
    if (spec.columns.empty()) throw std::invalid_argument("no columns requested");

    std::vector<std::vector<std::optional<std::int64_t>>> rows;
    for (int d = spec.d_min; d <= spec.d_max; ++d) {
        std::vector<std::optional<std::int64_t>> row;
        for (TableColumn col : spec.columns)
            row.push_back(cell_value(col, spec.n, d, spec.limits));
        rows.push_back(std::move(row));
    }

    std::ostringstream out;
    if (spec.format == TableFormat::Json) {
        nlohmann::json j;
        j["n"] = spec.n;
        j["rows"] = nlohmann::json::array();
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            nlohmann::json row;
            row["d"] = spec.d_min + i;
            for (std::size_t c = 0; c < spec.columns.size(); ++c) {
                const char* label = table_column_label(spec.columns[c]);
                if (rows[i][c]) row[label] = *rows[i][c];
                else row[label] = nullptr;
            }
            j["rows"].push_back(std::move(row));
        }
        return j.dump(2) + "\n";
    }
    if (spec.format == TableFormat::Csv) {
        out << "d";
        for (TableColumn col : spec.columns) out << ',' << table_column_label(col);
        out << "\n";
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            out << (spec.d_min + i);
            for (const auto& cell : rows[i]) {
                out << ',';
                if (cell) out << *cell;
                else out << kDash;
            }
            out << "\n";
        }
        return out.str();
    }
    // aligned text
    out << std::setw(4) << "d";
    for (TableColumn col : spec.columns)
        out << std::setw(12) << table_column_label(col);
    out << "\n";
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
        out << std::setw(4) << (spec.d_min + i);
        for (const auto& cell : rows[i]) {
            if (cell) out << std::setw(12) << *cell;
            else out << std::setw(12) << kDash;
        }
        out << "\n";
    }
    return out.str();
}

} // namespace spreadcover
