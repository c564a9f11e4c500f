#include "spreadcover/bounds.hpp"

#include <numeric>
#include <stdexcept>

#include "spreadcover/errors.hpp"

namespace spreadcover {

std::int64_t v(int n, int d) {
    return num_monomials(n, d);
}

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    return (a + b - 1) / b;
}

} // namespace

Rational ggr_rho_upper_exact(int n, int d) {
    if (n < 2 || d < 2) throw InapplicableBound("GGR bounds require n >= 2, d >= 2");
    // v_n(d)/n + (n-1) v_{n-1}(d)/n over the common denominator n
    std::int64_t num = v(n, d) + static_cast<std::int64_t>(n - 1) * v(n - 1, d);
    std::int64_t g = std::gcd(num, static_cast<std::int64_t>(n));
    return Rational{num / g, n / g};
}

GgrBounds ggr_bounds(int n, int d) {
    Rational upper = ggr_rho_upper_exact(n, d);
    return GgrBounds{ceil_div(v(n, d), n), ceil_div(upper.num, upper.den)};
}

std::int64_t hw_upper(int d) {
    if (d < 5) throw InapplicableBound("HW bound requires d >= 5");
    std::int64_t dd = d;
    std::int64_t num = d % 2 ? dd * dd * dd + 15 * dd * dd - 61 * dd + 261
                             : dd * dd * dd + 15 * dd * dd - 34 * dd + 240;
    if (num % 24 != 0) throw std::logic_error("HW polynomial not divisible by 24");
    return num / 24;
}

std::int64_t alpha4_exact(int d) {
    if (d < 0) throw std::invalid_argument("d must be >= 0");
    std::int64_t v4 = v(4, d);
    if (d % 2) {
        if (v4 % 4 != 0) throw std::logic_error("alpha4 formula non-integral");
        return v4 / 4;
    }
    // v_4(d)/4 + (3d+6)/8 = (2 v_4(d) + 3d + 6)/8
    std::int64_t num = 2 * v4 + 3 * static_cast<std::int64_t>(d) + 6;
    if (num % 8 != 0) throw std::logic_error("alpha4 formula non-integral");
    return num / 8;
}

std::optional<SmallNExact> small_n_exact(int n, int d) {
    if (n == 1) return SmallNExact{1, 1};
    if (n == 2) {
        SmallNExact r{d / 2 + 1, std::nullopt};
        if (d >= 1) r.rho = (d - 1 + 1) / 2 + 1; // ceil((d-1)/2) + 1
        return r;
    }
    if (n == 4) return SmallNExact{alpha4_exact(d), std::nullopt};
    return std::nullopt;
}

BoundReport bound_report(int n, int d, bool include_greedy, bool include_exact,
                         const SearchLimits& lim) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (d < 0) throw std::invalid_argument("d must be >= 0");
    BoundReport report;
    report.n = n;
    report.d = d;

    if (n >= 2 && d >= 2) {
        GgrBounds g = ggr_bounds(n, d);
        report.entries.push_back({BoundQuantity::Alpha, BoundKind::Lower, g.alpha_lower,
                                  "GGR", "ceil(v_n(d)/n)"});
        report.entries.push_back({BoundQuantity::Rho, BoundKind::Upper, g.rho_upper,
                                  "GGR", "ceiling of the rational bound"});
    }
    if (n == 4 && d >= 5) {
        report.entries.push_back({BoundQuantity::Rho, BoundKind::Upper, hw_upper(d),
                                  "HW", d % 2 ? "odd-d polynomial" : "even-d polynomial"});
    }
    if (auto small = small_n_exact(n, d)) {
        std::string method = n == 1   ? "alpha2-formula"
                             : n == 2 ? "alpha2-formula"
                                      : "alpha4-formula";
        report.entries.push_back(
            {BoundQuantity::Alpha, BoundKind::Exact, small->alpha, method, ""});
        if (small->rho) {
            report.entries.push_back(
                {BoundQuantity::Rho, BoundKind::Exact, *small->rho, "rho2-formula", ""});
        }
    }
    if (include_greedy) {
        if (n >= 2 && d >= 1 && num_monomials(n, d) <= lim.max_vertices) {
            CliqueCover c = greedy_cover(n, d, lim.max_vertices);
            report.entries.push_back({BoundQuantity::Rho, BoundKind::Upper,
                                      c.size(), "greedy", "minimal upward clique cover"});
        } else {
            report.skipped.push_back("greedy: instance outside limits");
        }
    }
    if (include_exact) {
        if (num_monomials(n, d) <= lim.max_vertices) {
            MonomialGraph g(n, d, lim.max_vertices);
            ExactAlphaResult a = max_independent_set(g, lim);
            report.entries.push_back({BoundQuantity::Alpha,
                                      a.proven_optimal ? BoundKind::Exact : BoundKind::Lower,
                                      a.value, "exact-search",
                                      a.proven_optimal ? "" : "budget exhausted"});
            if (d >= 1) {
                ExactRhoResult r = min_upward_clique_cover(n, d, lim);
                report.entries.push_back({BoundQuantity::Rho,
                                          r.proven_optimal ? BoundKind::Exact : BoundKind::Upper,
                                          r.value, "exact-search",
                                          r.proven_optimal ? "" : "budget exhausted"});
            }
        } else {
            report.skipped.push_back("exact: instance outside limits");
        }
    }
    return report;
}

} // namespace spreadcover
