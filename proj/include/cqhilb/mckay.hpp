#ifndef CQHILB_MCKAY_HPP
#define CQHILB_MCKAY_HPP

#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cqhilb/action.hpp"
#include "cqhilb/rational.hpp"
#include "cqhilb/toric.hpp"

namespace cqh {

class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// min of ((r-t)A + tB)/r over A, B in [0, bound] with B - A = k mod r.
Rational m_coefficient_brute_force(const GroupData& g, int k, int t, int bound);
/// min{t k, (r-t)(r-k)}/r, and 0 for k = 0.
Rational m_coefficient_closed_form(const GroupData& g, int k, int t);

/// Coefficient of E_t in M_{chi_k}. Both routes must agree (bound 2r),
/// otherwise ConsistencyError.
Rational m_coefficient(const GroupData& g, int k, int t);

/// entries[k][t-1] is the coefficient of E_t in M_{chi_k}.
struct MDivisorTable {
    int r = 0;
    std::vector<std::vector<Rational>> entries;

    const Rational& at(int k, int t) const {
        return entries[static_cast<std::size_t>(k)][static_cast<std::size_t>(t - 1)];
    }
};

/// Full table; throws ConsistencyError if a row departs from the
/// kt/r (t <= r-k), (r-k)(r-t)/r (t > r-k) pattern.
MDivisorTable m_table(const GroupData& g);

Divisor m_divisor(const GroupData& g, int k);

/// Character shift of multiplication by the 1-based coordinate i:
/// +1 on the first block, -1 on the second.
int isotypic_shift(const GroupData& g, int i);

/// B_{a,i} = M_{a + shift(i)} + div(z_i) - M_a. Throws ConsistencyError
/// unless the Z-part is exactly Z_i and every E-coefficient is 0 or 1.
Divisor b_divisor(const GroupData& g, int a, int i);

struct FMComplex {
    CharIndex character;
    /// terms[p] is the multiset (sorted) of line-bundle labels in degree -p.
    std::vector<std::vector<int>> terms;
    std::vector<Divisor> incoming_b;  // maps into degree 0, one per coordinate
    std::vector<Divisor> outgoing_b;  // maps out of degree -n, one per coordinate
};

/// Koszul-type complex representing the image of the skyscraper at chi_t.
FMComplex fm_complex(const GroupData& g, int t);

/// Exceptional divisors where every incoming map vanishes. Requires t != 0 mod r
/// (std::domain_error otherwise); throws ConsistencyError unless a singleton.
std::set<int> h0_support(const GroupData& g, int t);

/// Exceptional divisors where every outgoing map from degree -n vanishes.
std::set<int> h_minus_n_support(const GroupData& g, int t);

/// Pairs (t, E index) for t = 1..r-1; throws ConsistencyError unless bijective.
std::vector<std::pair<int, int>> correspondence_table(const GroupData& g);

}  // namespace cqh

#endif  // CQHILB_MCKAY_HPP
