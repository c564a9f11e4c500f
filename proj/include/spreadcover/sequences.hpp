#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace spreadcover {

// A053307(d): number of non-negative integer 2x2 matrices with entry sum d,
// up to row and column permutations. Three independent routes:

// direct enumeration of canonical class representatives (lexicographic
// minimum over the Klein four-group of row/column swaps)
std::int64_t a053307_enumerate(int d);

// Burnside count: average of the fixed-point counts of the four group elements
std::int64_t a053307_burnside(int d);

// A000330(i) = 0^2 + 1^2 + ... + i^2
std::int64_t a000330(int i);

// A006527(i) = (i^3 + 2i)/3
std::int64_t a006527(int i);

// Finite prefix of a formal power series in t.
struct SeriesExpansion {
    std::vector<std::int64_t> coefficients;
};

// First `terms` coefficients of (t^2 - t + 1)/((1-t^2)^2 (1-t)^2) by exact
// long division.
SeriesExpansion expand_a053307_gf(int terms);

struct Section3Check {
    std::string name;
    bool passed;
    std::string detail; // first counterexample, when failed
};

struct Section3Report {
    bool all_passed = true;
    std::vector<Section3Check> checks;
};

// Cross-checks enumeration, Burnside, and the generating function against
// each other and against the alpha_4 closed form for all d <= max_d, plus
// the interleaving identities a053307(2d+1) = a000330(d+1) and
// a053307(2d) = a006527(d+1).
Section3Report verify_section3(int max_d);

} // namespace spreadcover
