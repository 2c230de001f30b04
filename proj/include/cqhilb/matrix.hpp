#ifndef CQHILB_MATRIX_HPP
#define CQHILB_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "cqhilb/rational.hpp"

namespace cqh {

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using RatVector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class RatMatrix {
public:
    RatMatrix(std::size_t rows, std::size_t cols);
    RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);
    static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols);
    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    RatVector row(std::size_t r) const;
    RatVector apply(const RatVector& v) const;

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> entries_;
};

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);

/*
 * Exact determinant. Each row is scaled by the lcm of its denominators,
 * the resulting integer matrix is reduced with fraction-free Bareiss
 * elimination, and the row scales are divided back out.
 *
 * Pivoting picks the first nonzero entry in the current column so results
 * are reproducible. Throws DimensionError for non-square input.
 */
Rational determinant(const RatMatrix& m);

struct Nullspace {
    std::size_t rank = 0;
    std::vector<RatVector> basis;
};

/// Rank and kernel basis via reduced row echelon form. One basis vector per
/// free column, with a 1 in that column and zeros in the other free columns.
Nullspace nullspace(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// Solves m x = b for square nonsingular m; returns false when m is singular.
bool solve(const RatMatrix& m, const RatVector& b, RatVector& x);

}  // namespace cqh

#endif  // CQHILB_MATRIX_HPP
