#include <doctest.h>

#include "cqhilb/matrix.hpp"
#include "gen.hpp"

using cqh::RatMatrix;
using cqh::Rational;

namespace {

// Laplace expansion along the first row.
Rational cofactor_det(const RatMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    Rational total;
    for (std::size_t c = 0; c < n; ++c) {
        RatMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0, k = 0; j < n; ++j)
                if (j != c) minor(i - 1, k++) = m(i, j);
        const Rational term = m(0, c) * cofactor_det(minor);
        total += c % 2 ? -term : term;
    }
    return total;
}

}  // namespace

TEST_CASE("determinant of small fixed matrices") {
    CHECK(cqh::determinant(RatMatrix{{1, 2}, {3, 4}}) == Rational(-2));
    CHECK(cqh::determinant(RatMatrix{{0, 1}, {1, 0}}) == Rational(-1));
    CHECK(cqh::determinant(RatMatrix{{Rational(1, 2), 0}, {0, Rational(2, 3)}}) == Rational(1, 3));
    CHECK(cqh::determinant(RatMatrix(0, 0)) == Rational(1));
    CHECK(cqh::determinant(RatMatrix{{1, 2}, {2, 4}}) == Rational(0));
    CHECK_THROWS_AS(cqh::determinant(RatMatrix(2, 3)), cqh::DimensionError);
}

TEST_CASE("determinant agrees with cofactor expansion") {
    for (int trial = 0; trial < 200; ++trial) {
        const auto n = static_cast<std::size_t>(gen::integer(1, 5));
        const RatMatrix m = gen::matrix(n, n);
        CHECK(cqh::determinant(m) == cofactor_det(m));
    }
}

TEST_CASE("determinant is multiplicative") {
    for (int trial = 0; trial < 100; ++trial) {
        const auto n = static_cast<std::size_t>(gen::integer(1, 4));
        const RatMatrix a = gen::matrix(n, n, 4), b = gen::matrix(n, n, 4);
        CHECK(cqh::determinant(a * b) == cqh::determinant(a) * cqh::determinant(b));
    }
}

TEST_CASE("nullspace basis lies in the kernel and rank plus nullity is the column count") {
    for (int trial = 0; trial < 200; ++trial) {
        const auto rows = static_cast<std::size_t>(gen::integer(1, 5));
        const auto cols = static_cast<std::size_t>(gen::integer(1, 6));
        RatMatrix m = gen::matrix(rows, cols, 3);
        // force some dependent rows
        if (rows >= 2 && trial % 3 == 0)
            for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = m(0, c) * Rational(2);
        const auto ns = cqh::nullspace(m);
        CHECK(ns.rank + ns.basis.size() == cols);
        CHECK(ns.rank == cqh::rank(m));
        for (const auto& v : ns.basis)
            for (const auto& x : m.apply(v)) CHECK(x.is_zero());
    }
}

TEST_CASE("square rank is full exactly when the determinant is nonzero") {
    for (int trial = 0; trial < 100; ++trial) {
        const auto n = static_cast<std::size_t>(gen::integer(1, 4));
        const RatMatrix m = gen::matrix(n, n, 2);
        CHECK((cqh::rank(m) == n) == !cqh::determinant(m).is_zero());
    }
}

TEST_CASE("solve returns the unique solution or reports singularity") {
    for (int trial = 0; trial < 100; ++trial) {
        const auto n = static_cast<std::size_t>(gen::integer(1, 4));
        const RatMatrix m = gen::matrix(n, n);
        cqh::RatVector x0;
        for (std::size_t i = 0; i < n; ++i) x0.push_back(gen::rational());
        cqh::RatVector x;
        const bool ok = cqh::solve(m, m.apply(x0), x);
        CHECK(ok == !cqh::determinant(m).is_zero());
        if (ok) CHECK(x == x0);
    }
    cqh::RatVector x;
    CHECK_FALSE(cqh::solve(RatMatrix{{1, 1}, {1, 1}}, {1, 2}, x));
}

TEST_CASE("identity and product") {
    const RatMatrix m{{1, 2}, {3, 4}};
    CHECK(m * RatMatrix::identity(2) == m);
    CHECK_THROWS_AS(m * RatMatrix(3, 1), cqh::DimensionError);
}
