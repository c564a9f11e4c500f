#pragma once

#include <vector>

#include "spreadcover/cover.hpp"
#include "spreadcover/monomial.hpp"

namespace spreadcover {

struct SearchLimits {
    int max_vertices = 2000;
    double time_budget_seconds = 300.0;
};

struct ExactAlphaResult {
    int value = 0;
    std::vector<Monomial> witness; // an independent set of size value
    bool proven_optimal = false;
};

struct ExactRhoResult {
    int value = 0;
    CliqueCover witness;
    bool proven_optimal = false;
};

// Independence number of g via branch and bound (max clique search on the
// complement with greedy-coloring bounds). On budget exhaustion returns the
// incumbent with proven_optimal = false.
ExactAlphaResult max_independent_set(const MonomialGraph& g, const SearchLimits& lim = {});

// Minimum upward clique cover of S_n(d) via depth-first set-cover search.
// The n mandatory bases x_i^{d-1} are forced into every candidate; the
// greedy cover seeds the incumbent.
ExactRhoResult min_upward_clique_cover(int n, int d, const SearchLimits& lim = {});

} // namespace spreadcover
