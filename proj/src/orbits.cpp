#include "spreadcover/orbits.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace spreadcover {

int OrbitClass::degree() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

std::vector<int> OrbitClass::padded() const {
    std::vector<int> v = parts;
    v.resize(n, 0);
    return v;
}

std::string OrbitClass::to_string() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out << ',';
        out << parts[i];
    }
    out << ')';
    return out.str();
}

const char* orbit_kind_name(OrbitKind k) {
    switch (k) {
        case OrbitKind::Independent: return "independent";
        case OrbitKind::Clique: return "clique";
        case OrbitKind::Neither: return "neither";
    }
    return "?";
}

namespace {

// Descending lex generation of partitions: largest first part first.
void partitions_rec(int remaining, int max_part, int slots, std::vector<int>& acc,
                    int n, std::vector<OrbitClass>& out) {
    if (remaining == 0) {
        out.push_back(OrbitClass{acc, n});
        return;
    }
    if (slots == 0) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        partitions_rec(remaining - p, p, slots - 1, acc, n, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<OrbitClass> partitions(int d, int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (d < 0) throw std::invalid_argument("d must be >= 0");
    std::vector<OrbitClass> out;
    std::vector<int> acc;
    partitions_rec(d, d, n, acc, n, out);
    std::sort(out.begin(), out.end(), [](const OrbitClass& a, const OrbitClass& b) {
        return rlex_greater(a.padded(), b.padded());
    });
    return out;
}

std::vector<Monomial> expand_orbit(const OrbitClass& o) {
    std::vector<int> v = o.padded();
    std::sort(v.begin(), v.end());
    std::vector<Monomial> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return rlex_greater(a, b); });
    return out;
}

std::int64_t orbit_size(const OrbitClass& o) {
    // n! / prod(mult_v!) over multiplicities of distinct padded values
    std::vector<int> v = o.padded();
    std::sort(v.begin(), v.end());
    std::int64_t size = 1;
    // build up n!/(prod of factorials) incrementally to stay in range
    std::int64_t num = 1;
    int run = 0;
    for (int i = 0; i < o.n; ++i) {
        num *= i + 1;
        if (i > 0 && v[i] == v[i - 1]) {
            ++run;
        } else {
            run = 1;
        }
        num /= run;
    }
    size = num;
    return size;
}

OrbitKind classify_orbit(const OrbitClass& o) {
    std::vector<int> v = o.padded();
    bool independent = true;
    for (std::size_t i = 0; i < v.size() && independent; ++i) {
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            if (std::abs(v[i] - v[j]) == 1) {
                independent = false;
                break;
            }
        }
    }
    if (independent) return OrbitKind::Independent;

    std::vector<Monomial> members = expand_orbit(o);
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            if (!adjacent(members[i], members[j])) return OrbitKind::Neither;
        }
    }
    return OrbitKind::Clique;
}

Permutation::Permutation(std::vector<int> images_) : images(std::move(images_)) {
    std::vector<bool> seen(images.size(), false);
    for (int i : images) {
        if (i < 0 || i >= n() || seen[i])
            throw std::invalid_argument("image sequence is not a bijection");
        seen[i] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images.size());
    for (int i = 0; i < n(); ++i) inv[images[i]] = i;
    return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
    if (n() != other.n()) throw std::invalid_argument("size mismatch");
    std::vector<int> im(images.size());
    for (int i = 0; i < n(); ++i) im[i] = images[other.images[i]];
    return Permutation(std::move(im));
}

Monomial apply_permutation(const Permutation& sigma, const Monomial& m) {
    if (sigma.n() != m.size()) throw std::invalid_argument("size mismatch");
    std::vector<int> e(m.size());
    for (int j = 0; j < m.size(); ++j) e[sigma.images[j]] = m[j];
    return Monomial(std::move(e));
}

} // namespace spreadcover
