#include <doctest.h>

#include <set>

#include "spreadcover/cover.hpp"
#include "spreadcover/errors.hpp"
#include "spreadcover/orbits.hpp"

using namespace spreadcover;

namespace {

Monomial m(std::vector<int> e) { return Monomial(std::move(e)); }

// The minimal cover of S_3(3) from the worked example: bases x1^2, x2^2,
// x3^2, x1x2.
CliqueCover example_cover_33() {
    CliqueCover c;
    c.n = 3;
    c.d = 3;
    c.add(UpwardClique{m({2, 0, 0})}, CliqueOrigin::Mandatory);
    c.add(UpwardClique{m({0, 2, 0})}, CliqueOrigin::Mandatory);
    c.add(UpwardClique{m({0, 0, 2})}, CliqueOrigin::Mandatory);
    c.add(UpwardClique{m({1, 1, 0})}, CliqueOrigin::Greedy);
    return c;
}

} // namespace

TEST_CASE("upward_clique") {
    auto c4 = upward_clique(m({1, 1, 0}), 3);
    std::set<std::vector<int>> got;
    for (const auto& x : c4) got.insert(x.exponents());
    CHECK(got == std::set<std::vector<int>>{{2, 1, 0}, {1, 2, 0}, {1, 1, 1}});

    auto c1 = upward_clique(m({2, 0, 0}), 3);
    got.clear();
    for (const auto& x : c1) got.insert(x.exponents());
    CHECK(got == std::set<std::vector<int>>{{3, 0, 0}, {2, 1, 0}, {2, 0, 1}});

    // members are pairwise adjacent vertices
    for (std::size_t i = 0; i < c4.size(); ++i)
        for (std::size_t j = i + 1; j < c4.size(); ++j)
            CHECK(adjacent(c4[i], c4[j]));
}

TEST_CASE("cliques_containing") {
    auto f = cliques_containing(m({1, 2, 0}));
    REQUIRE(f.size() == 2);
    std::set<std::vector<int>> bases;
    for (const auto& cl : f) bases.insert(cl.base.exponents());
    CHECK(bases == std::set<std::vector<int>>{{0, 2, 0}, {1, 1, 0}});

    auto pure = cliques_containing(m({0, 4, 0}));
    REQUIRE(pure.size() == 1);
    CHECK(pure[0].base == m({0, 3, 0}));

    CHECK(cliques_containing(m({1, 1, 1})).size() == 3);
    CHECK_THROWS_AS(cliques_containing(m({0, 0, 0})), std::invalid_argument);
}

TEST_CASE("verify_cover") {
    CHECK(verify_cover(example_cover_33()).valid);

    CliqueCover mandatory_only = example_cover_33();
    mandatory_only.cliques.pop_back();
    mandatory_only.origins.pop_back();
    auto report = verify_cover(mandatory_only);
    CHECK_FALSE(report.valid);
    REQUIRE(report.missing.size() == 1);
    CHECK(report.missing[0] == m({1, 1, 1}));

    CliqueCover empty;
    empty.n = 3;
    empty.d = 3;
    auto empty_report = verify_cover(empty);
    CHECK_FALSE(empty_report.valid);
    CHECK(empty_report.missing.size() == 10);
}

TEST_CASE("frequencies") {
    MonomialGraph g(3, 3);
    auto freq = frequencies(example_cover_33());
    CHECK(freq[g.rank(m({2, 1, 0}))] == 2); // in cliques of x1^2 and x1x2
    CHECK(freq[g.rank(m({3, 0, 0}))] == 1);
    CHECK(freq[g.rank(m({0, 3, 0}))] == 1);
    CHECK(freq[g.rank(m({0, 0, 3}))] == 1);

    CliqueCover empty;
    empty.n = 3;
    empty.d = 3;
    for (int f : frequencies(empty)) CHECK(f == 0);
}

TEST_CASE("prune") {
    // a duplicate clique has no frequency-1 vertex and gets discarded
    CliqueCover with_dup = example_cover_33();
    with_dup.add(UpwardClique{m({1, 1, 0})}, CliqueOrigin::Greedy);
    auto pruned = prune(with_dup);
    CHECK(pruned.size() == 4);

    // the already-minimal example is unchanged
    auto same = prune(example_cover_33());
    CHECK(same.cliques == example_cover_33().cliques);

    // mandatory cliques survive: x_i^d keeps frequency 1
    for (const auto& cl : pruned.cliques) {
        // every remaining clique still holds a frequency-1 vertex
        auto freq = frequencies(pruned);
        MonomialGraph g(3, 3);
        bool has_essential = false;
        for (const auto& v : cl.members())
            if (freq[g.rank(v)] == 1) has_essential = true;
        CHECK(has_essential);
    }

    CliqueCover invalid;
    invalid.n = 3;
    invalid.d = 3;
    CHECK_THROWS_AS(prune(invalid), ContractViolation);

    // idempotence
    auto twice = prune(pruned);
    CHECK(twice.cliques == pruned.cliques);
}

TEST_CASE("is_minimal") {
    CHECK(is_minimal(example_cover_33()));
    CliqueCover with_dup = example_cover_33();
    with_dup.add(UpwardClique{m({0, 1, 1})}, CliqueOrigin::Greedy);
    CHECK_FALSE(is_minimal(with_dup));

    CliqueCover invalid;
    invalid.n = 3;
    invalid.d = 3;
    CHECK_THROWS_AS(is_minimal(invalid), ContractViolation);
}

TEST_CASE("greedy_cover basics") {
    auto c33 = greedy_cover(3, 3);
    CHECK(c33.size() == 4);
    CHECK(verify_cover(c33).valid);
    CHECK(is_minimal(c33));

    // n=2 closed form ceil((d-1)/2)+1
    for (int d = 1; d <= 12; ++d) {
        auto c = greedy_cover(2, d);
        CHECK(verify_cover(c).valid);
        CHECK(c.size() == (d - 1 + 1) / 2 + 1);
    }

    // degenerate d=1: a single degree-0 base covers everything
    auto c1 = greedy_cover(4, 1);
    CHECK(c1.size() == 1);
    CHECK(verify_cover(c1).valid);

    CHECK_THROWS_AS(greedy_cover(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(greedy_cover(4, 40, 100), ResourceLimitError);
}

TEST_CASE("greedy_cover contains the mandatory cliques and is deterministic") {
    for (int n = 2; n <= 5; ++n) {
        for (int d = 2; d <= (n >= 5 ? 5 : 8); ++d) {
            auto c = greedy_cover(n, d);
            CHECK(verify_cover(c).valid);
            CHECK(is_minimal(c));
            std::set<std::vector<int>> bases;
            for (const auto& cl : c.cliques) CHECK(bases.insert(cl.base.exponents()).second);
            for (int i = 0; i < n; ++i) {
                std::vector<int> e(n, 0);
                e[i] = d - 1;
                CHECK(bases.count(e));
            }
            auto again = greedy_cover(n, d);
            CHECK(c.cliques == again.cliques);
        }
    }
}

TEST_CASE("permuted covers stay valid with equal size") {
    auto c = greedy_cover(3, 4);
    std::vector<int> images{2, 0, 1};
    Permutation sigma(images);
    CliqueCover permuted;
    permuted.n = c.n;
    permuted.d = c.d;
    for (std::size_t i = 0; i < c.cliques.size(); ++i)
        permuted.add(UpwardClique{apply_permutation(sigma, c.cliques[i].base)},
                     c.origins[i]);
    CHECK(permuted.size() == c.size());
    CHECK(verify_cover(permuted).valid);
}
