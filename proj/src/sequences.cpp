#include "spreadcover/sequences.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>
#include <stdexcept>

#include "spreadcover/bounds.hpp"

namespace spreadcover {

namespace {

using Mat = std::array<int, 4>; // [[a,b],[c,e]] stored as (a,b,c,e)

Mat canonical(const Mat& m) {
    // Klein four-group: identity, row swap, column swap, both
    Mat row{m[2], m[3], m[0], m[1]};
    Mat col{m[1], m[0], m[3], m[2]};
    Mat both{m[3], m[2], m[1], m[0]};
    return std::min({m, row, col, both});
}

} // namespace

std::int64_t a053307_enumerate(int d) {
    if (d < 0) throw std::invalid_argument("d must be >= 0");
    std::set<Mat> classes;
    for (int a = 0; a <= d; ++a) {
        for (int b = 0; a + b <= d; ++b) {
            for (int c = 0; a + b + c <= d; ++c) {
                int e = d - a - b - c;
                classes.insert(canonical(Mat{a, b, c, e}));
            }
        }
    }
    return static_cast<std::int64_t>(classes.size());
}

std::int64_t a053307_burnside(int d) {
    if (d < 0) throw std::invalid_argument("d must be >= 0");
    // fixed by identity: all compositions of d into 4 parts
    std::int64_t fixed_id = static_cast<std::int64_t>(d + 1) * (d + 2) * (d + 3) / 6;
    // fixed by row swap (a=c, b=e), column swap (a=b, c=e), or both (a=e, b=c):
    // each forces two equal pairs, so 2a+2b = d
    std::int64_t fixed_swap = d % 2 == 0 ? d / 2 + 1 : 0;
    std::int64_t total = fixed_id + 3 * fixed_swap;
    if (total % 4 != 0) throw std::logic_error("Burnside sum not divisible by 4");
    return total / 4;
}

std::int64_t a000330(int i) {
    if (i < 0) throw std::invalid_argument("i must be >= 0");
    std::int64_t n = i;
    return n * (n + 1) * (2 * n + 1) / 6;
}

std::int64_t a006527(int i) {
    if (i < 0) throw std::invalid_argument("i must be >= 0");
    std::int64_t n = i;
    std::int64_t num = n * n * n + 2 * n;
    if (num % 3 != 0) throw std::logic_error("A006527 formula non-integral");
    return num / 3;
}

SeriesExpansion expand_a053307_gf(int terms) {
    if (terms < 1) throw std::invalid_argument("terms must be >= 1");
    // numerator t^2 - t + 1; denominator (1-t^2)^2 (1-t)^2 expanded
    std::vector<std::int64_t> num{1, -1, 1};
    std::vector<std::int64_t> den{1};
    auto mul = [](const std::vector<std::int64_t>& p, const std::vector<std::int64_t>& q) {
        std::vector<std::int64_t> r(p.size() + q.size() - 1, 0);
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
        return r;
    };
    const std::vector<std::int64_t> one_minus_t2{1, 0, -1};
    const std::vector<std::int64_t> one_minus_t{1, -1};
    den = mul(den, one_minus_t2);
    den = mul(den, one_minus_t2);
    den = mul(den, one_minus_t);
    den = mul(den, one_minus_t);

    // long division: c[k] = (num[k] - sum_{j=1..k} den[j] c[k-j]) / den[0]
    SeriesExpansion out;
    out.coefficients.resize(terms, 0);
    for (int k = 0; k < terms; ++k) {
        std::int64_t acc = k < static_cast<int>(num.size()) ? num[k] : 0;
        for (int j = 1; j <= k && j < static_cast<int>(den.size()); ++j)
            acc -= den[j] * out.coefficients[k - j];
        if (acc % den[0] != 0) throw std::logic_error("series division not exact");
        out.coefficients[k] = acc / den[0];
    }
    return out;
}

Section3Report verify_section3(int max_d) {
    if (max_d < 0) throw std::invalid_argument("max_d must be >= 0");
    Section3Report report;
    auto gf = expand_a053307_gf(max_d + 1);

    auto record = [&](const std::string& name, int bad_d, std::int64_t lhs,
                      std::int64_t rhs) {
        Section3Check check{name, bad_d < 0, ""};
        if (bad_d >= 0) {
            std::ostringstream detail;
            detail << "first mismatch at d=" << bad_d << ": " << lhs << " != " << rhs;
            check.detail = detail.str();
            report.all_passed = false;
        }
        report.checks.push_back(std::move(check));
    };

    auto compare = [&](const std::string& name, auto lhs_fn, auto rhs_fn) {
        for (int d = 0; d <= max_d; ++d) {
            std::int64_t lhs = lhs_fn(d);
            std::int64_t rhs = rhs_fn(d);
            if (lhs != rhs) {
                record(name, d, lhs, rhs);
                return;
            }
        }
        record(name, -1, 0, 0);
    };

    compare("enumerate == burnside", a053307_enumerate, a053307_burnside);
    compare("enumerate == generating function", a053307_enumerate,
            [&](int d) { return gf.coefficients[d]; });
    compare("enumerate == alpha_4 closed form", a053307_enumerate,
            [](int d) { return alpha4_exact(d); });
    compare("interleaving: a053307(2d+1) == a000330(d+1)",
            [](int d) { return a053307_enumerate(2 * d + 1); },
            [](int d) { return a000330(d + 1); });
    compare("interleaving: a053307(2d) == a006527(d+1)",
            [](int d) { return a053307_enumerate(2 * d); },
            [](int d) { return a006527(d + 1); });
    return report;
}

} // namespace spreadcover
