#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace spreadcover {

// A monomial of fixed degree in n variables, stored as its exponent vector.
// Variables are 0-indexed internally and rendered as x1..xn in text output.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exponents);

    int size() const { return static_cast<int>(exps_.size()); }
    int degree() const { return degree_; }
    int operator[](int i) const { return exps_[i]; }
    const std::vector<int>& exponents() const { return exps_; }

    // m * x_i
    Monomial times_variable(int i) const;
    // m / x_i; requires exponent of x_i to be positive
    Monomial divide_variable(int i) const;

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    // Product notation, e.g. "x1^2*x2"; the degree-0 monomial prints as "1".
    std::string to_string() const;

private:
    std::vector<int> exps_;
    int degree_ = 0;
};

// Parses either product notation ("x1^2*x2", "1") or a JSON-style array
// ("[2,1,0]"). n gives the ambient variable count; product notation may omit
// trailing variables.
Monomial parse_monomial(const std::string& text, int n);

// True when the last non-zero entry of a-b is negative, i.e. a is the
// larger monomial in reverse lexicographic order.
bool rlex_greater(const std::vector<int>& a, const std::vector<int>& b);
inline bool rlex_greater(const Monomial& a, const Monomial& b) {
    return rlex_greater(a.exponents(), b.exponents());
}

// deg(lcm(a,b)) = sum of componentwise maxima.
int lcm_degree(const Monomial& a, const Monomial& b);

// Adjacency in S_n(d): deg(lcm(a,b)) == d+1.
bool adjacent(const Monomial& a, const Monomial& b);

// All monomials of degree d in n variables, sorted descending reverse-lex.
std::vector<Monomial> enumerate_monomials(int n, int d);

// binom(n+d-1, d) as a 64-bit integer; throws std::overflow_error if it
// does not fit.
std::int64_t num_monomials(int n, int d);

constexpr int kDefaultVertexCap = 100000;

// The graph S_n(d): vertices are the degree-d monomials in reverse-lex
// order, edges join monomials whose lcm has degree d+1. Immutable after
// construction.
class MonomialGraph {
public:
    MonomialGraph(int n, int d, int vertex_cap = kDefaultVertexCap);

    int n() const { return n_; }
    int d() const { return d_; }
    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    std::int64_t num_edges() const;

    const std::vector<Monomial>& vertices() const { return vertices_; }
    const Monomial& vertex(int i) const { return vertices_[i]; }
    const std::vector<int>& neighbors(int i) const { return adjacency_[i]; }

    // 0-based position of m in the reverse-lex vertex order; throws
    // std::invalid_argument if m is not a vertex.
    int rank(const Monomial& m) const;

private:
    int n_;
    int d_;
    std::vector<Monomial> vertices_;
    std::vector<std::vector<int>> adjacency_;
    std::map<std::vector<int>, int> rank_;
};

} // namespace spreadcover
