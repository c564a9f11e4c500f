#pragma once

#include <map>
#include <vector>

#include "spreadcover/monomial.hpp"

namespace spreadcover {

// The n-vertex clique {base*x_i : 1 <= i <= n} of S_n(d), identified by its
// degree-(d-1) base monomial.
struct UpwardClique {
    Monomial base;

    std::vector<Monomial> members() const;
    bool contains(const Monomial& v) const;
    bool operator==(const UpwardClique& o) const { return base == o.base; }
};

enum class CliqueOrigin { Mandatory, Greedy };

// An ordered collection of upward cliques of S_n(d). Validity (whether the
// member sets cover all of M_d) is checked by verify_cover, not maintained
// as an invariant.
struct CliqueCover {
    int n = 0;
    int d = 0;
    std::vector<UpwardClique> cliques;
    std::vector<CliqueOrigin> origins; // parallel to cliques

    int size() const { return static_cast<int>(cliques.size()); }
    void add(UpwardClique c, CliqueOrigin origin);
};

// The n monomials base*x_i.
std::vector<Monomial> upward_clique(const Monomial& base, int n);

// One clique per distinct variable dividing v, base v/x_j. Bases appear in
// increasing variable order.
std::vector<UpwardClique> cliques_containing(const Monomial& v);

struct CoverReport {
    bool valid = false;
    std::vector<Monomial> missing; // reverse-lex order
};

CoverReport verify_cover(const CliqueCover& c);

// Per-vertex count of cliques containing it, keyed by rank in the
// reverse-lex vertex order of S_n(d). Uncovered vertices map to 0.
std::vector<int> frequencies(const CliqueCover& c);

// Discards cliques with no frequency-1 vertex, scanning in insertion order
// and recomputing frequencies after each discard, until a full pass removes
// nothing. Requires a valid cover.
CliqueCover prune(const CliqueCover& c);

// True iff every clique contains a frequency-1 vertex. Requires a valid cover.
bool is_minimal(const CliqueCover& c);

// Greedy upward clique cover: seed with the n mandatory cliques x_i^{d-1},
// walk the orbits in reverse-lex order covering each uncovered vertex with
// the clique that contains the fewest already-covered vertices (ties broken
// toward the reverse-lex-greatest base), then prune to minimality.
CliqueCover greedy_cover(int n, int d, int vertex_cap = kDefaultVertexCap);

} // namespace spreadcover
