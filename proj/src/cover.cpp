#include "spreadcover/cover.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "spreadcover/errors.hpp"
#include "spreadcover/orbits.hpp"

namespace spreadcover {

std::vector<Monomial> UpwardClique::members() const {
    return upward_clique(base, base.size());
}

bool UpwardClique::contains(const Monomial& v) const {
    if (v.size() != base.size() || v.degree() != base.degree() + 1) return false;
    // v = base * x_i for some i iff v - base is a unit vector
    int diff_at = -1;
    for (int i = 0; i < v.size(); ++i) {
        int diff = v[i] - base[i];
        if (diff == 0) continue;
        if (diff != 1 || diff_at != -1) return false;
        diff_at = i;
    }
    return diff_at != -1;
}

void CliqueCover::add(UpwardClique c, CliqueOrigin origin) {
    cliques.push_back(std::move(c));
    origins.push_back(origin);
}

std::vector<Monomial> upward_clique(const Monomial& base, int n) {
    if (base.size() != n) throw std::invalid_argument("base length mismatch");
    std::vector<Monomial> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) out.push_back(base.times_variable(i));
    return out;
}

std::vector<UpwardClique> cliques_containing(const Monomial& v) {
    if (v.degree() == 0) throw std::invalid_argument("degree-0 monomial has no factorization");
    std::vector<UpwardClique> out;
    for (int j = 0; j < v.size(); ++j) {
        if (v[j] > 0) out.push_back(UpwardClique{v.divide_variable(j)});
    }
    return out;
}

CoverReport verify_cover(const CliqueCover& c) {
    std::set<std::vector<int>> covered;
    for (const auto& cl : c.cliques) {
        for (const auto& m : cl.members()) covered.insert(m.exponents());
    }
    CoverReport report;
    for (const auto& m : enumerate_monomials(c.n, c.d)) {
        if (!covered.count(m.exponents())) report.missing.push_back(m);
    }
    report.valid = report.missing.empty();
    return report;
}

namespace {

std::map<std::vector<int>, int> rank_map(int n, int d) {
    std::map<std::vector<int>, int> rank;
    auto verts = enumerate_monomials(n, d);
    for (std::size_t i = 0; i < verts.size(); ++i) rank[verts[i].exponents()] = static_cast<int>(i);
    return rank;
}

std::vector<int> frequencies_with_rank(const CliqueCover& c,
                                       const std::map<std::vector<int>, int>& rank) {
    std::vector<int> freq(rank.size(), 0);
    for (const auto& cl : c.cliques) {
        for (const auto& m : cl.members()) {
            auto it = rank.find(m.exponents());
            if (it != rank.end()) ++freq[it->second];
        }
    }
    return freq;
}

bool has_frequency_one_member(const UpwardClique& cl, const std::vector<int>& freq,
                              const std::map<std::vector<int>, int>& rank) {
    for (const auto& m : cl.members()) {
        auto it = rank.find(m.exponents());
        if (it != rank.end() && freq[it->second] == 1) return true;
    }
    return false;
}

} // namespace

std::vector<int> frequencies(const CliqueCover& c) {
    return frequencies_with_rank(c, rank_map(c.n, c.d));
}

CliqueCover prune(const CliqueCover& c) {
    if (!verify_cover(c).valid)
        throw ContractViolation("prune requires a valid cover");
    auto rank = rank_map(c.n, c.d);
    CliqueCover result = c;
    bool discarded = true;
    while (discarded) {
        discarded = false;
        auto freq = frequencies_with_rank(result, rank);
        for (int i = 0; i < result.size(); ++i) {
            if (!has_frequency_one_member(result.cliques[i], freq, rank)) {
                result.cliques.erase(result.cliques.begin() + i);
                result.origins.erase(result.origins.begin() + i);
                discarded = true;
                freq = frequencies_with_rank(result, rank);
                --i;
            }
        }
    }
    return result;
}

bool is_minimal(const CliqueCover& c) {
    if (!verify_cover(c).valid)
        throw ContractViolation("is_minimal requires a valid cover");
    auto rank = rank_map(c.n, c.d);
    auto freq = frequencies_with_rank(c, rank);
    for (const auto& cl : c.cliques) {
        if (!has_frequency_one_member(cl, freq, rank)) return false;
    }
    return true;
}

CliqueCover greedy_cover(int n, int d, int vertex_cap) {
    if (n < 2) throw std::invalid_argument("greedy_cover requires n >= 2");
    if (d < 1) throw std::invalid_argument("greedy_cover requires d >= 1");
    if (num_monomials(n, d) > vertex_cap)
        throw ResourceLimitError("vertex count above cap");

    auto rank = rank_map(n, d);
    std::vector<bool> covered(rank.size(), false);
    auto mark = [&](const UpwardClique& cl) {
        for (const auto& m : cl.members()) covered[rank.at(m.exponents())] = true;
    };

    CliqueCover cover;
    cover.n = n;
    cover.d = d;

    // Mandatory cliques: x_i^d factors only as (x_i^{d-1})x_i. For d = 1 all
    // n bases coincide in the single degree-0 monomial.
    std::set<std::vector<int>> seen_bases;
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = d - 1;
        if (!seen_bases.insert(e).second) continue;
        UpwardClique cl{Monomial(e)};
        mark(cl);
        cover.add(std::move(cl), CliqueOrigin::Mandatory);
    }

    for (const auto& orbit : partitions(d, n)) {
        for (const auto& v : expand_orbit(orbit)) {
            if (covered[rank.at(v.exponents())]) continue;
            UpwardClique best;
            int best_count = -1;
            for (auto& cand : cliques_containing(v)) {
                int count = 0;
                for (const auto& m : cand.members()) {
                    if (covered[rank.at(m.exponents())]) ++count;
                }
                if (best_count < 0 || count < best_count ||
                    (count == best_count && rlex_greater(cand.base, best.base))) {
                    best = std::move(cand);
                    best_count = count;
                }
            }
            mark(best);
            cover.add(std::move(best), CliqueOrigin::Greedy);
        }
    }

    return prune(cover);
}

} // namespace spreadcover
