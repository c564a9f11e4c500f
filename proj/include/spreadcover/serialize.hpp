#pragma once

#include <string>

#include "spreadcover/bounds.hpp"
#include "spreadcover/cover.hpp"
#include "spreadcover/exact.hpp"

namespace spreadcover {

// Cover file format: {"n": int, "d": int, "cliques": [[e1,...,en], ...]}
// with each inner array a base exponent vector of degree d-1, in output order.
std::string cover_to_json(const CliqueCover& c);
CliqueCover cover_from_json(const std::string& text);

std::string alpha_result_to_json(const ExactAlphaResult& r);
std::string rho_result_to_json(const ExactRhoResult& r);

enum class ReportFormat { Text, Json, Csv };

std::string render_bound_report(const BoundReport& r, ReportFormat format);

} // namespace spreadcover
