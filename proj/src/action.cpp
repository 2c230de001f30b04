#include "cqhilb/action.hpp"

#include <algorithm>
#include <numeric>

#include "cqhilb/matrix.hpp"

namespace cqh {

GroupData::GroupData(int s, int n, int r) : s_(s), n_(n), r_(r), weights_(static_cast<std::size_t>(n)) {
    for (int i = 0; i < n; ++i) weights_[static_cast<std::size_t>(i)] = i < s ? r - 1 : 1;
}

GroupData GroupData::validate(int s, int n, int r) {
    if (r < 2) throw ParameterError("r must be at least 2 (got " + std::to_string(r) + ")");
    if (s <= 0 || s >= n) {
        throw ParameterError("need 0 < s < n (got s=" + std::to_string(s) + ", n=" + std::to_string(n) + ")");
    }
    return GroupData(s, n, r);
}

CharIndex::CharIndex(int k, int order) : k_(0), order_(order) {
    if (order < 1) throw std::invalid_argument("character group order must be positive");
    k_ = ((k % order) + order) % order;
}

CharIndex CharIndex::combine(const CharIndex& other) const {
    if (order_ != other.order_) throw std::invalid_argument("characters of different groups");
    return CharIndex(k_ + other.k_, order_);
}

CharIndex char_combine(const CharIndex& a, const CharIndex& b) { return a.combine(b); }
CharIndex char_inverse(const CharIndex& a) { return a.inverse(); }

Monomial::Monomial(std::vector<int> e) : exponents(std::move(e)) {
    for (int x : exponents)
        if (x < 0) throw std::invalid_argument("negative exponent");
}

Monomial Monomial::variable(int n, int i, int power) {
    Monomial m = one(n);
    m.exponents.at(static_cast<std::size_t>(i)) = power;
    return m;
}

int Monomial::degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exponents.size(); ++i)
        if (exponents[i] > other.exponents[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out = *this;
    for (std::size_t i = 0; i < exponents.size(); ++i) out.exponents[i] += other.exponents[i];
    return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
    Monomial out = *this;
    for (std::size_t i = 0; i < exponents.size(); ++i) out.exponents[i] -= other.exponents[i];
    return out;
}

Monomial Monomial::lcm(const Monomial& other) const {
    Monomial out = *this;
    for (std::size_t i = 0; i < exponents.size(); ++i) out.exponents[i] = std::max(out.exponents[i], other.exponents[i]);
    return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    // within a degree, a larger exponent on an earlier variable sorts first
    for (std::size_t i = 0; i < a.exponents.size(); ++i)
        if (a.exponents[i] != b.exponents[i]) return b.exponents[i] <=> a.exponents[i];
    return a.exponents.size() <=> b.exponents.size();
}

std::string Monomial::str() const {
    std::string out;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += "z_" + std::to_string(i + 1);
        if (exponents[i] > 1) out += "^" + std::to_string(exponents[i]);
    }
    return out.empty() ? "1" : out;
}

int first_block_degree(const GroupData& g, const Monomial& m) {
    return std::accumulate(m.exponents.begin(), m.exponents.begin() + g.s(), 0);
}

int second_block_degree(const GroupData& g, const Monomial& m) {
    return std::accumulate(m.exponents.begin() + g.s(), m.exponents.end(), 0);
}

CharIndex weight(const GroupData& g, const Monomial& m) {
    if (m.size() != g.n()) throw DimensionError("monomial has the wrong number of variables");
    return CharIndex(second_block_degree(g, m) - first_block_degree(g, m), g.r());
}

std::vector<Monomial> monomials_up_to_degree(int n, int max_degree) {
    std::vector<Monomial> out;
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    // odometer over exponent vectors with bounded total
    auto rec = [&](auto&& self, int idx, int remaining) -> void {
        if (idx == n) {
            out.emplace_back(e);
            return;
        }
        for (int x = 0; x <= remaining; ++x) {
            e[static_cast<std::size_t>(idx)] = x;
            self(self, idx + 1, remaining - x);
        }
        e[static_cast<std::size_t>(idx)] = 0;
    };
    rec(rec, 0, max_degree);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cqh
