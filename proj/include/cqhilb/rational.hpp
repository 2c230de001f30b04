#ifndef CQHILB_RATIONAL_HPP
#define CQHILB_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cqh {

/// Raised when a checked 64-bit integer operation would overflow.
class ArithmeticOverflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

namespace checked {
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t sub(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
std::int64_t neg(std::int64_t a);
}  // namespace checked

/*
 * Exact rational number in lowest terms with a positive denominator.
 *
 * Backed by 64-bit integers with overflow detection on every operation.
 * Every quantity in this library has denominator dividing r, so the
 * values stay tiny; an overflow is reported rather than wrapped.
 */
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design of the number type
    Rational(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return (num_ > 0) - (num_ < 0); }
    Rational abs() const { return num_ < 0 ? -*this : *this; }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// Canonical "p/q" form; integers are written with denominator 1.
    std::string str() const;

    /// Accepts "p/q" or a bare integer "p". Throws std::invalid_argument.
    static Rational parse(std::string_view text);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace cqh

#endif  // CQHILB_RATIONAL_HPP
