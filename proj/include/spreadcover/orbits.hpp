#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spreadcover/monomial.hpp"

namespace spreadcover {

// One Sym(n)-orbit of degree-d monomials, identified with a partition of d
// into at most n positive parts. The padded exponent vector (parts followed
// by zeros) is the reverse-lex-largest orbit member.
struct OrbitClass {
    std::vector<int> parts; // non-increasing, positive
    int n = 0;

    int degree() const;
    std::vector<int> padded() const;
    std::string to_string() const;
};

enum class OrbitKind { Independent, Clique, Neither };

const char* orbit_kind_name(OrbitKind k);

// All partitions of d into at most n parts, in descending reverse-lex order
// of padded vectors (equivalently descending lex order of the parts).
std::vector<OrbitClass> partitions(int d, int n);

// Distinct permutations of the padded vector, sorted descending reverse-lex.
std::vector<Monomial> expand_orbit(const OrbitClass& o);

// |expand_orbit(o)| via the multinomial count, without expansion.
std::int64_t orbit_size(const OrbitClass& o);

// classify without full pairwise expansion where a closed rule exists:
// an orbit is independent iff no two padded entries differ by exactly one;
// the clique case is decided by pairwise brute force.
OrbitKind classify_orbit(const OrbitClass& o);

// Bijection on {0..n-1} stored as an image sequence.
struct Permutation {
    std::vector<int> images;

    explicit Permutation(std::vector<int> images_);
    static Permutation identity(int n);
    int n() const { return static_cast<int>(images.size()); }
    Permutation inverse() const;
    // (a.compose(b))(i) = a(b(i))
    Permutation compose(const Permutation& other) const;
};

// Index permutation action: result[sigma(j)] = m[j], so that
// apply(compose(s,t), m) == apply(s, apply(t, m)).
Monomial apply_permutation(const Permutation& sigma, const Monomial& m);

} // namespace spreadcover
