#include "spreadcover/exact.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <set>
#include <stdexcept>

#include "spreadcover/errors.hpp"

namespace spreadcover {

namespace {

using Clock = std::chrono::steady_clock;

// Fixed-capacity bitset over vertex ranks.
class Bitset {
public:
    explicit Bitset(int bits = 0) : bits_(bits), words_((bits + 63) / 64, 0) {}

    void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    bool empty() const {
        for (auto w : words_) if (w) return false;
        return true;
    }
    int count() const {
        int c = 0;
        for (auto w : words_) c += __builtin_popcountll(w);
        return c;
    }
    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& and_not(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    // lowest set bit, -1 if none
    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i]) return static_cast<int>(i) * 64 + __builtin_ctzll(words_[i]);
        }
        return -1;
    }
    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                f(static_cast<int>(i) * 64 + __builtin_ctzll(w));
                w &= w - 1;
            }
        }
    }

private:
    int bits_;
    std::vector<std::uint64_t> words_;
};

struct Deadline {
    Clock::time_point end;
    mutable long ticks = 0;
    mutable bool exceeded = false;

    bool hit() const {
        if (exceeded) return true;
        if (++ticks % 1024 == 0 && Clock::now() > end) exceeded = true;
        return exceeded;
    }
};

// Max clique in the complement graph, Tomita-style with greedy coloring.
class MisSearch {
public:
    MisSearch(const MonomialGraph& g, Clock::time_point end)
        : v_(g.num_vertices()), comp_(v_, Bitset(v_)), deadline_{end} {
        for (int i = 0; i < v_; ++i) {
            std::set<int> nbrs(g.neighbors(i).begin(), g.neighbors(i).end());
            for (int j = 0; j < v_; ++j) {
                if (j != i && !nbrs.count(j)) comp_[i].set(j);
            }
        }
    }

    void run() {
        Bitset all(v_);
        for (int i = 0; i < v_; ++i) all.set(i);
        expand(all, 0);
    }

    const std::vector<int>& best() const { return best_; }
    bool complete() const { return !deadline_.exceeded; }

private:
    void expand(Bitset candidates, int depth) {
        if (deadline_.hit()) return;
        if (candidates.empty()) {
            if (depth > static_cast<int>(best_.size())) best_ = current_;
            return;
        }
        // Greedy coloring of the candidates; color number bounds the size of
        // any clique inside them.
        std::vector<int> order;
        std::vector<int> color;
        greedy_color(candidates, order, color);
        for (int idx = static_cast<int>(order.size()) - 1; idx >= 0; --idx) {
            int v = order[idx];
            if (depth + color[idx] <= static_cast<int>(best_.size())) return;
            current_.push_back(v);
            Bitset next = candidates;
            next &= comp_[v];
            expand(std::move(next), depth + 1);
            current_.pop_back();
            if (deadline_.exceeded) return;
            candidates.reset(v);
        }
    }

    void greedy_color(const Bitset& candidates, std::vector<int>& order,
                      std::vector<int>& color) const {
        Bitset uncolored = candidates;
        int c = 0;
        while (!uncolored.empty()) {
            ++c;
            Bitset cls = uncolored; // vertices still admissible for color c
            while (true) {
                int v = cls.first();
                if (v < 0) break;
                order.push_back(v);
                color.push_back(c);
                uncolored.reset(v);
                cls.reset(v);
                // a color class is an independent set of the complement graph
                cls.and_not(comp_[v]);
            }
        }
    }

    int v_;
    std::vector<Bitset> comp_;
    std::vector<int> current_;
    std::vector<int> best_;
    Deadline deadline_;
};

} // namespace

ExactAlphaResult max_independent_set(const MonomialGraph& g, const SearchLimits& lim) {
    if (lim.max_vertices <= 0 || lim.time_budget_seconds <= 0)
        throw std::invalid_argument("search limits must be positive");
    if (g.num_vertices() > lim.max_vertices)
        throw ResourceLimitError("graph exceeds max_vertices limit");

    auto end = Clock::now() +
               std::chrono::duration_cast<Clock::duration>(
                   std::chrono::duration<double>(lim.time_budget_seconds));
    MisSearch search(g, end);
    search.run();

    ExactAlphaResult result;
    result.proven_optimal = search.complete();
    for (int v : search.best()) result.witness.push_back(g.vertex(v));
    std::sort(result.witness.begin(), result.witness.end(),
              [](const Monomial& a, const Monomial& b) { return rlex_greater(a, b); });
    result.value = static_cast<int>(result.witness.size());
    return result;
}

namespace {

struct CoverSearch {
    int n;
    int v; // universe size
    std::vector<UpwardClique> cliques;          // all candidate cliques
    std::vector<Bitset> clique_members;         // member ranks per clique
    std::vector<std::vector<int>> containing;   // per vertex, clique indices
    std::vector<int> mandatory;                 // forced clique indices
    std::vector<int> best;                      // incumbent (clique indices)
    bool complete = true;
    Deadline deadline;

    void dfs(Bitset uncovered, std::vector<int>& chosen) {
        if (deadline.hit()) {
            complete = false;
            return;
        }
        if (uncovered.empty()) {
            if (chosen.size() < best.size()) best = chosen;
            return;
        }
        int lower = (uncovered.count() + n - 1) / n;
        if (static_cast<int>(chosen.size()) + lower >= static_cast<int>(best.size()))
            return;
        // branch on the uncovered vertex with the fewest containing cliques
        int pick = -1;
        std::size_t fewest = SIZE_MAX;
        uncovered.for_each([&](int u) {
            if (containing[u].size() < fewest) {
                fewest = containing[u].size();
                pick = u;
            }
        });
        for (int ci : containing[pick]) {
            chosen.push_back(ci);
            Bitset next = uncovered;
            next.for_each([&](int u) {
                if (clique_members[ci].test(u)) next.reset(u);
            });
            dfs(std::move(next), chosen);
            chosen.pop_back();
            if (deadline.exceeded) return;
        }
    }
};

} // namespace

ExactRhoResult min_upward_clique_cover(int n, int d, const SearchLimits& lim) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (d < 1) throw std::invalid_argument("d must be >= 1");
    if (num_monomials(n, d) > lim.max_vertices)
        throw ResourceLimitError("vertex count exceeds max_vertices limit");

    MonomialGraph g(n, d, lim.max_vertices);
    CoverSearch s;
    s.n = n;
    s.v = g.num_vertices();
    s.deadline.end = Clock::now() +
                     std::chrono::duration_cast<Clock::duration>(
                         std::chrono::duration<double>(lim.time_budget_seconds));

    // candidate cliques: every degree-(d-1) base, mandatory ones first
    std::set<std::vector<int>> mandatory_bases;
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = d - 1;
        mandatory_bases.insert(e);
    }
    std::vector<Monomial> bases;
    for (const auto& b : mandatory_bases) bases.emplace_back(b);
    for (const auto& b : enumerate_monomials(n, d - 1)) {
        if (!mandatory_bases.count(b.exponents())) bases.push_back(b);
    }
    s.containing.resize(s.v);
    for (std::size_t ci = 0; ci < bases.size(); ++ci) {
        UpwardClique cl{bases[ci]};
        Bitset members(s.v);
        for (const auto& m : cl.members()) members.set(g.rank(m));
        if (ci < mandatory_bases.size()) s.mandatory.push_back(static_cast<int>(ci));
        s.cliques.push_back(std::move(cl));
        s.clique_members.push_back(std::move(members));
    }
    for (int u = 0; u < s.v; ++u) {
        for (std::size_t ci = 0; ci < s.cliques.size(); ++ci) {
            if (s.clique_members[ci].test(u)) s.containing[u].push_back(static_cast<int>(ci));
        }
    }

    // incumbent from the greedy heuristic (valid upper bound, may be hit exactly)
    CliqueCover greedy = n >= 2 ? greedy_cover(n, d, lim.max_vertices) : CliqueCover{};
    std::size_t greedy_size = n >= 2 ? greedy.cliques.size() : SIZE_MAX;

    Bitset uncovered(s.v);
    for (int u = 0; u < s.v; ++u) uncovered.set(u);
    std::vector<int> chosen;
    for (int ci : s.mandatory) {
        chosen.push_back(ci);
        uncovered.for_each([&](int u) {
            if (s.clique_members[ci].test(u)) uncovered.reset(u);
        });
    }
    s.best.assign(s.cliques.size() + 1, -1); // sentinel "incumbent" longer than any cover
    s.dfs(std::move(uncovered), chosen);

    ExactRhoResult result;
    result.proven_optimal = s.complete;
    std::vector<int> winner = s.best;
    if (winner.size() > greedy_size) {
        // search found nothing better than greedy (budget ran out early)
        result.witness = greedy;
        result.value = static_cast<int>(greedy_size);
        return result;
    }
    result.witness.n = n;
    result.witness.d = d;
    for (std::size_t i = 0; i < winner.size(); ++i) {
        result.witness.add(s.cliques[winner[i]],
                           i < s.mandatory.size() ? CliqueOrigin::Mandatory
                                                  : CliqueOrigin::Greedy);
    }
    result.value = result.witness.size();
    return result;
}

} // namespace spreadcover
