#include "cqhilb/mckay.hpp"

#include <algorithm>
#include <optional>

namespace cqh {

namespace {

int mod(int a, int r) { return ((a % r) + r) % r; }

void check_ray(const GroupData& g, int t) {
    if (t < 1 || t > g.r() - 1) throw std::out_of_range("ray index t must satisfy 1 <= t <= r-1");
}

}  // namespace

Rational m_coefficient_brute_force(const GroupData& g, int k, int t, int bound) {
    check_ray(g, t);
    const int r = g.r();
    std::optional<Rational> best;
    for (int a = 0; a <= bound; ++a) {
        for (int b = 0; b <= bound; ++b) {
            if (mod(b - a, r) != mod(k, r)) continue;
            const Rational v(static_cast<std::int64_t>(r - t) * a + static_cast<std::int64_t>(t) * b, r);
            if (!best || v < *best) best = v;
        }
    }
    if (!best) throw ConsistencyError("brute-force bound too small for the infimum");
    return *best;
}

Rational m_coefficient_closed_form(const GroupData& g, int k, int t) {
    check_ray(g, t);
    const int r = g.r();
    k = mod(k, r);
    if (k == 0) return 0;
    return Rational(std::min<std::int64_t>(static_cast<std::int64_t>(t) * k, static_cast<std::int64_t>(r - t) * (r - k)), r);
}

Rational m_coefficient(const GroupData& g, int k, int t) {
    const Rational brute = m_coefficient_brute_force(g, k, t, 2 * g.r());
    const Rational closed = m_coefficient_closed_form(g, k, t);
    if (brute != closed) {
        throw ConsistencyError("m_coefficient(k=" + std::to_string(k) + ", t=" + std::to_string(t) +
                               "): brute force " + brute.str() + " vs closed form " + closed.str());
    }
    return brute;
}

MDivisorTable m_table(const GroupData& g) {
    const int r = g.r();
    MDivisorTable table{r, {}};
    for (int k = 0; k < r; ++k) {
        std::vector<Rational> row;
        for (int t = 1; t <= r - 1; ++t) {
            const Rational value = m_coefficient(g, k, t);
            const Rational pattern = k == 0 ? Rational(0)
                                     : t <= r - k ? Rational(static_cast<std::int64_t>(k) * t, r)
                                                  : Rational(static_cast<std::int64_t>(r - k) * (r - t), r);
            if (value != pattern) throw ConsistencyError("M-table row " + std::to_string(k) + " departs from the row pattern");
            row.push_back(value);
        }
        table.entries.push_back(std::move(row));
    }
    return table;
}

Divisor m_divisor(const GroupData& g, int k) {
    Divisor d;
    for (int t = 1; t <= g.r() - 1; ++t) d.add(RayId::exceptional(t), m_coefficient(g, mod(k, g.r()), t));
    return d;
}

int isotypic_shift(const GroupData& g, int i) {
    if (i < 1 || i > g.n()) throw std::out_of_range("coordinate index must satisfy 1 <= i <= n");
    return i <= g.s() ? 1 : -1;
}

Divisor b_divisor(const GroupData& g, int a, int i) {
    const Divisor b = m_divisor(g, a + isotypic_shift(g, i)) + principal_divisor(g, i) - m_divisor(g, a);
    for (const auto& [id, c] : b.terms()) {
        const bool ok = id.is_exceptional() ? c == Rational(1) : (id.index == i && c == Rational(1));
        if (!ok) {
            throw ConsistencyError("vanishing divisor B(chi_" + std::to_string(mod(a, g.r())) + ", z_" + std::to_string(i) +
                                   ") = " + b.str() + " is not integral of the expected shape");
        }
    }
    if (b.coefficient(RayId::coordinate(i)) != Rational(1)) throw ConsistencyError("vanishing divisor lost its Z-part");
    return b;
}

FMComplex fm_complex(const GroupData& g, int t) {
    const int n = g.n(), r = g.r();
    FMComplex cx{CharIndex(t, r), std::vector<std::vector<int>>(static_cast<std::size_t>(n + 1)), {}, {}};
    for (unsigned subset = 0; subset < (1u << n); ++subset) {
        int p = 0, label = -t;
        for (int i = 1; i <= n; ++i) {
            if (!(subset & (1u << (i - 1)))) continue;
            ++p;
            label -= isotypic_shift(g, i);
        }
        cx.terms[static_cast<std::size_t>(p)].push_back(mod(label, r));
    }
    for (auto& term : cx.terms) std::sort(term.begin(), term.end());
    for (int i = 1; i <= n; ++i) {
        cx.incoming_b.push_back(b_divisor(g, -t - isotypic_shift(g, i), i));
        cx.outgoing_b.push_back(b_divisor(g, n - 2 * g.s() - t, i));
    }
    return cx;
}

namespace {

std::set<int> common_exceptional_support(const GroupData& g, const std::vector<Divisor>& divisors) {
    std::set<int> out;
    for (int t = 1; t <= g.r() - 1; ++t) {
        const bool everywhere = std::all_of(divisors.begin(), divisors.end(),
                                            [&](const Divisor& d) { return d.coefficient(RayId::exceptional(t)) == Rational(1); });
        if (everywhere) out.insert(t);
    }
    return out;
}

}  // namespace

std::set<int> h0_support(const GroupData& g, int t) {
    if (mod(t, g.r()) == 0) throw std::domain_error("the trivial character has no exceptional H^0 support");
    const auto support = common_exceptional_support(g, fm_complex(g, t).incoming_b);
    if (support.size() != 1) throw ConsistencyError("H^0 support of chi_" + std::to_string(t) + " is not a single divisor");
    return support;
}

std::set<int> h_minus_n_support(const GroupData& g, int t) {
    return common_exceptional_support(g, fm_complex(g, t).outgoing_b);
}

std::vector<std::pair<int, int>> correspondence_table(const GroupData& g) {
    std::vector<std::pair<int, int>> out;
    std::set<int> seen;
    for (int t = 1; t <= g.r() - 1; ++t) {
        const int e = *h0_support(g, t).begin();
        if (!seen.insert(e).second) throw ConsistencyError("two characters share the divisor E_" + std::to_string(e));
        out.emplace_back(t, e);
    }
    return out;
}

}  // namespace cqh
