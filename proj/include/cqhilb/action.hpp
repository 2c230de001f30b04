#ifndef CQHILB_ACTION_HPP
#define CQHILB_ACTION_HPP

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace cqh {

class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/*
 * The diagonal action of Z/r on C^n with s coordinates of one sign and
 * n - s of the other.
 *
 * Weights follow the convention for coordinate functions: the first s
 * coordinates carry weight r - 1 and the remaining n - s carry weight 1,
 * so a monomial with first-block degree A and second-block degree B has
 * weight (B - A) mod r.
 */
class GroupData {
public:
    /// Throws ParameterError unless 0 < s < n and r >= 2.
    static GroupData validate(int s, int n, int r);

    int s() const { return s_; }
    int n() const { return n_; }
    int r() const { return r_; }
    const std::vector<int>& weights() const { return weights_; }

    /// 0-based coordinate index belongs to the first block.
    bool first_block(int i) const { return i < s_; }

    /// The same variety with the blocks exchanged.
    GroupData mirror() const { return validate(n_ - s_, n_, r_); }

    friend bool operator==(const GroupData& a, const GroupData& b) {
        return a.s_ == b.s_ && a.n_ == b.n_ && a.r_ == b.r_;
    }

private:
    GroupData(int s, int n, int r);
    int s_, n_, r_;
    std::vector<int> weights_;
};

/// A character chi_k of Z/r.
class CharIndex {
public:
    CharIndex(int k, int order);

    int k() const { return k_; }
    int order() const { return order_; }

    /// Throws std::invalid_argument if the group orders differ.
    CharIndex combine(const CharIndex& other) const;
    CharIndex inverse() const { return CharIndex(order_ - k_, order_); }

    friend auto operator<=>(const CharIndex&, const CharIndex&) = default;

private:
    int k_;
    int order_;
};

CharIndex char_combine(const CharIndex& a, const CharIndex& b);
CharIndex char_inverse(const CharIndex& a);

/// Exponent vector of a monomial in C[z_1..z_n].
struct Monomial {
    std::vector<int> exponents;

    Monomial() = default;
    explicit Monomial(std::vector<int> e);
    static Monomial one(int n) { return Monomial(std::vector<int>(static_cast<std::size_t>(n), 0)); }
    /// z_i^power with 0-based i.
    static Monomial variable(int n, int i, int power = 1);

    int size() const { return static_cast<int>(exponents.size()); }
    int degree() const;
    bool divides(const Monomial& other) const;
    Monomial operator*(const Monomial& other) const;
    /// Exact quotient; caller guarantees divisibility.
    Monomial operator/(const Monomial& other) const;
    Monomial lcm(const Monomial& other) const;

    /// Degree order refined by reverse lexicographic exponent comparison;
    /// extends divisibility.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) = default;

    /// "1", "z_1", "z_1^2*z_3", ...
    std::string str() const;
};

/// Degree in the first block (A) and in the second block (B).
int first_block_degree(const GroupData& g, const Monomial& m);
int second_block_degree(const GroupData& g, const Monomial& m);

/// Throws DimensionError on a length mismatch.
CharIndex weight(const GroupData& g, const Monomial& m);

/// All monomials in n variables of total degree at most max_degree, sorted.
std::vector<Monomial> monomials_up_to_degree(int n, int max_degree);

}  // namespace cqh

#endif  // CQHILB_ACTION_HPP
