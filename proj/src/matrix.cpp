#include "cqhilb/matrix.hpp"

#include <numeric>
#include <utility>

namespace cqh {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw DimensionError("ragged matrix literal");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows, std::size_t cols) {
    RatMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw DimensionError("row length does not match column count");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatVector RatMatrix::row(std::size_t r) const {
    return RatVector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RatVector RatMatrix::apply(const RatVector& v) const {
    if (v.size() != cols_) throw DimensionError("vector length does not match column count");
    RatVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
    return out;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("incompatible matrix product");
    RatMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

Rational determinant(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;

    // clear denominators row by row
    std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n));
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        std::int64_t l = 1;
        for (std::size_t j = 0; j < n; ++j) l = checked::mul(l / std::gcd(l, m(i, j).den()), m(i, j).den());
        for (std::size_t j = 0; j < n; ++j) a[i][j] = checked::mul(m(i, j).num(), l / m(i, j).den());
        scale = checked::mul(scale, l);
    }

    std::int64_t sign = 1;
    std::int64_t prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // exact division is guaranteed by Sylvester's identity
                const std::int64_t v = checked::sub(checked::mul(a[i][j], a[k][k]), checked::mul(a[i][k], a[k][j]));
                a[i][j] = v / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return Rational(checked::mul(sign, a[n - 1][n - 1]), scale);
}

namespace {

// In-place reduced row echelon form; returns pivot column per pivot row.
std::vector<std::size_t> rref(RatMatrix& a) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t p = row;
        while (p < a.rows() && a(p, col).is_zero()) ++p;
        if (p == a.rows()) continue;
        if (p != row)
            for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(p, c), a(row, c));
        const Rational inv = Rational(1) / a(row, col);
        for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a(i, col).is_zero()) continue;
            const Rational f = a(i, col);
            for (std::size_t c = col; c < a.cols(); ++c) a(i, c) -= f * a(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

Nullspace nullspace(const RatMatrix& m) {
    RatMatrix a = m;
    const auto pivots = rref(a);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;

    Nullspace out;
    out.rank = pivots.size();
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        RatVector v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, free);
        out.basis.push_back(std::move(v));
    }
    return out;
}

std::size_t rank(const RatMatrix& m) {
    RatMatrix a = m;
    return rref(a).size();
}

bool solve(const RatMatrix& m, const RatVector& b, RatVector& x) {
    if (m.rows() != m.cols() || b.size() != m.rows()) throw DimensionError("solve needs a square system");
    const std::size_t n = m.rows();
    RatMatrix aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n) = b[i];
    }
    const auto pivots = rref(aug);
    if (pivots.size() < n || pivots.back() >= n) return false;
    x.assign(n, Rational());
    for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
    return true;
}

}  // namespace cqh
