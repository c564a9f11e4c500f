#include "spreadcover/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "spreadcover/errors.hpp"

namespace spreadcover {

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
    for (int e : exps_) {
        if (e < 0) throw std::invalid_argument("negative exponent");
    }
    degree_ = std::accumulate(exps_.begin(), exps_.end(), 0);
}

Monomial Monomial::times_variable(int i) const {
    std::vector<int> e = exps_;
    e.at(i) += 1;
    return Monomial(std::move(e));
}

Monomial Monomial::divide_variable(int i) const {
    std::vector<int> e = exps_;
    if (e.at(i) == 0) throw std::invalid_argument("variable does not divide monomial");
    e[i] -= 1;
    return Monomial(std::move(e));
}

std::string Monomial::to_string() const {
    if (degree_ == 0) return "1";
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < size(); ++i) {
        if (exps_[i] == 0) continue;
        if (!first) out << '*';
        out << 'x' << (i + 1);
        if (exps_[i] > 1) out << '^' << exps_[i];
        first = false;
    }
    return out.str();
}

Monomial parse_monomial(const std::string& text, int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    if (s.empty()) throw std::invalid_argument("empty monomial");

    std::vector<int> e(n, 0);
    if (s.front() == '[') {
        // JSON-style exponent array
        if (s.back() != ']') throw std::invalid_argument("unterminated exponent array");
        std::istringstream in(s.substr(1, s.size() - 2));
        std::string item;
        int i = 0;
        while (std::getline(in, item, ',')) {
            if (i >= n) throw std::invalid_argument("exponent array longer than n");
            e[i++] = std::stoi(item);
        }
        if (i != n) throw std::invalid_argument("exponent array shorter than n");
        return Monomial(std::move(e));
    }
    if (s == "1") return Monomial(std::move(e));

    std::istringstream in(s);
    std::string factor;
    while (std::getline(in, factor, '*')) {
        if (factor.empty() || factor[0] != 'x')
            throw std::invalid_argument("bad factor '" + factor + "'");
        std::size_t caret = factor.find('^');
        int idx = std::stoi(factor.substr(1, caret == std::string::npos
                                                  ? std::string::npos
                                                  : caret - 1));
        int pow = caret == std::string::npos ? 1 : std::stoi(factor.substr(caret + 1));
        if (idx < 1 || idx > n) throw std::invalid_argument("variable index out of range");
        if (pow < 1) throw std::invalid_argument("exponent must be positive");
        e[idx - 1] += pow;
    }
    return Monomial(std::move(e));
}

bool rlex_greater(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("length mismatch");
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

int lcm_degree(const Monomial& a, const Monomial& b) {
    if (a.size() != b.size()) throw std::invalid_argument("length mismatch");
    int deg = 0;
    for (int i = 0; i < a.size(); ++i) deg += std::max(a[i], b[i]);
    return deg;
}

bool adjacent(const Monomial& a, const Monomial& b) {
    if (a.size() != b.size()) throw std::invalid_argument("length mismatch");
    if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch");
    return lcm_degree(a, b) == a.degree() + 1;
}

namespace {

void enumerate_rec(int n, int d, int pos, std::vector<int>& e,
                   std::vector<Monomial>& out) {
    if (pos == n - 1) {
        e[pos] = d;
        out.emplace_back(e);
        return;
    }
    for (int k = d; k >= 0; --k) {
        e[pos] = k;
        enumerate_rec(n, d - k, pos + 1, e, out);
    }
    e[pos] = 0;
}

} // namespace

std::vector<Monomial> enumerate_monomials(int n, int d) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (d < 0) throw std::invalid_argument("d must be >= 0");
    std::vector<Monomial> out;
    std::vector<int> e(n, 0);
    enumerate_rec(n, d, 0, e, out);
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return rlex_greater(a, b); });
    return out;
}

std::int64_t num_monomials(int n, int d) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (d < 0) throw std::invalid_argument("d must be >= 0");
    // binom(n+d-1, d) with overflow checks
    std::int64_t result = 1;
    int k = std::min(d, n - 1);
    for (int i = 1; i <= k; ++i) {
        std::int64_t num = n + d - k + i - 1;
        if (result > std::numeric_limits<std::int64_t>::max() / num)
            throw std::overflow_error("binomial overflow");
        result = result * num / i;
    }
    return result;
}

MonomialGraph::MonomialGraph(int n, int d, int vertex_cap) : n_(n), d_(d) {
    std::int64_t v = num_monomials(n, d);
    if (v > vertex_cap) {
        throw ResourceLimitError("S_" + std::to_string(n) + "(" + std::to_string(d) +
                                 ") has " + std::to_string(v) +
                                 " vertices, above the cap of " +
                                 std::to_string(vertex_cap));
    }
    vertices_ = enumerate_monomials(n, d);
    for (int i = 0; i < num_vertices(); ++i) {
        rank_[vertices_[i].exponents()] = i;
    }
    adjacency_.resize(vertices_.size());
    // Neighbors of u are u*x_k/x_l over ordered pairs k != l with u_l >= 1.
    for (int i = 0; i < num_vertices(); ++i) {
        const Monomial& u = vertices_[i];
        std::vector<int>& nbrs = adjacency_[i];
        for (int l = 0; l < n; ++l) {
            if (u[l] == 0) continue;
            for (int k = 0; k < n; ++k) {
                if (k == l) continue;
                std::vector<int> e = u.exponents();
                e[l] -= 1;
                e[k] += 1;
                nbrs.push_back(rank_.at(e));
            }
        }
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
}

std::int64_t MonomialGraph::num_edges() const {
    std::int64_t total = 0;
    for (const auto& nbrs : adjacency_) total += static_cast<std::int64_t>(nbrs.size());
    return total / 2;
}

int MonomialGraph::rank(const Monomial& m) const {
    auto it = rank_.find(m.exponents());
    if (it == rank_.end())
        throw std::invalid_argument("monomial " + m.to_string() + " is not a vertex");
    return it->second;
}

} // namespace spreadcover
