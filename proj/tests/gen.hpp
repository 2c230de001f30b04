#ifndef CQHILB_TESTS_GEN_HPP
#define CQHILB_TESTS_GEN_HPP

#include <random>
#include <vector>

#include "cqhilb/action.hpp"
#include "cqhilb/matrix.hpp"
#include "cqhilb/rational.hpp"

namespace gen {

// Fixed seed so failures reproduce.
inline std::mt19937_64& rng() {
    static std::mt19937_64 engine(20240611);
    return engine;
}

inline int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline cqh::Rational rational(int bound = 30) {
    return cqh::Rational(integer(-bound, bound), integer(1, bound));
}

inline cqh::RatMatrix matrix(std::size_t rows, std::size_t cols, int bound = 6) {
    cqh::RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rational(bound);
    return m;
}

inline cqh::Monomial monomial(int n, int max_exp) {
    std::vector<int> e;
    for (int i = 0; i < n; ++i) e.push_back(integer(0, max_exp));
    return cqh::Monomial(e);
}

// Every triple of the small sweep 2 <= r <= max_r, 2 <= n <= max_n.
inline std::vector<cqh::GroupData> triples(int max_n, int max_r) {
    std::vector<cqh::GroupData> out;
    for (int r = 2; r <= max_r; ++r)
        for (int n = 2; n <= max_n; ++n)
            for (int s = 1; s < n; ++s) out.push_back(cqh::GroupData::validate(s, n, r));
    return out;
}

}  // namespace gen

#endif
