#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spreadcover/exact.hpp"

namespace spreadcover {

// Number of degree-d monomials in n variables, binom(n+d-1, d).
std::int64_t v(int n, int d);

// Exact rational as a reduced numerator/denominator pair.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
};

struct GgrBounds {
    std::int64_t alpha_lower; // ceil(v_n(d)/n)
    std::int64_t rho_upper;   // ceil(v_n(d)/n + (n-1)/n * v_{n-1}(d))
};

// Sandwich bounds v_n(d)/n <= alpha_n(d) <= rho_n(d) <= v_n(d)/n +
// ((n-1)/n) v_{n-1}(d), rounded to integers by ceiling (the convention the
// published comparison tables use). Valid for n >= 2, d >= 2.
GgrBounds ggr_bounds(int n, int d);

// The exact rational value of the GGR upper bound, before rounding.
Rational ggr_rho_upper_exact(int n, int d);

// Hulett-Will upper bound on rho_4(d): (d^3+15d^2-61d+261)/24 for odd d,
// (d^3+15d^2-34d+240)/24 for even d. Valid for d >= 5.
std::int64_t hw_upper(int d);

// Closed form for alpha_4(d): v_4(d)/4 for odd d, v_4(d)/4 + (3d+6)/8 for
// even d. Always integral.
std::int64_t alpha4_exact(int d);

struct SmallNExact {
    std::int64_t alpha;
    std::optional<std::int64_t> rho;
};

// Known closed forms: n = 1 gives (1, 1); n = 2 gives floor(d/2)+1 and
// (for d >= 1) ceil((d-1)/2)+1; n = 4 gives the alpha closed form only.
// Other n: nothing.
std::optional<SmallNExact> small_n_exact(int n, int d);

enum class BoundQuantity { Alpha, Rho };
enum class BoundKind { Lower, Upper, Exact };

struct BoundEntry {
    BoundQuantity quantity;
    BoundKind kind;
    std::int64_t value;
    std::string method; // GGR, HW, alpha4-formula, alpha2-formula, rho2-formula, greedy, exact-search
    std::string note;
};

struct BoundReport {
    int n = 0;
    int d = 0;
    std::vector<BoundEntry> entries;
    std::vector<std::string> skipped; // entries absent due to limits
};

// Aggregates every applicable formula bound plus, on request, the greedy
// cover size and exact search values. Limit overruns become skipped notes,
// never failures.
BoundReport bound_report(int n, int d, bool include_greedy, bool include_exact,
                         const SearchLimits& lim = {});

} // namespace spreadcover
