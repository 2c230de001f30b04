#include "cqhilb/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>

namespace cqh {

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) throw ArithmeticOverflow("integer overflow in addition");
    return out;
}

std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_sub_overflow(a, b, &out)) throw ArithmeticOverflow("integer overflow in subtraction");
    return out;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) throw ArithmeticOverflow("integer overflow in multiplication");
    return out;
}

std::int64_t neg(std::int64_t a) {
    if (a == std::numeric_limits<std::int64_t>::min()) throw ArithmeticOverflow("integer overflow in negation");
    return -a;
}

}  // namespace checked

namespace {

// gcd on magnitudes; INT64_MIN is excluded by the checked negation below
std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    return std::gcd(a < 0 ? checked::neg(a) : a, b < 0 ? checked::neg(b) : b);
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = checked::neg(num);
        den = checked::neg(den);
    }
    const std::int64_t g = gcd64(num, den);
    num_ = num / g;
    den_ = den / g;
}

Rational Rational::operator-() const {
    Rational out;
    out.num_ = checked::neg(num_);
    out.den_ = den_;
    return out;
}

Rational& Rational::operator+=(const Rational& o) {
    // reduce through the gcd of denominators before multiplying out
    const std::int64_t g = std::gcd(den_, o.den_);
    const std::int64_t lhs = checked::mul(num_, o.den_ / g);
    const std::int64_t rhs = checked::mul(o.num_, den_ / g);
    *this = Rational(checked::add(lhs, rhs), checked::mul(den_ / g, o.den_));
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    const std::int64_t g1 = gcd64(num_, o.den_);
    const std::int64_t g2 = gcd64(o.num_, den_);
    *this = Rational(checked::mul(num_ / g1, o.num_ / g2), checked::mul(den_ / g2, o.den_ / g1));
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    return *this *= Rational(o.den_, o.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const std::int64_t g = std::gcd(a.den_, b.den_);
    return checked::mul(a.num_, b.den_ / g) <=> checked::mul(b.num_, a.den_ / g);
}

std::string Rational::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

Rational Rational::parse(std::string_view text) {
    auto parse_int = [&](std::string_view part) {
        std::int64_t value = 0;
        const char* first = part.data();
        const char* last = part.data() + part.size();
        if (!part.empty() && *first == '+') ++first;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last || first == last) {
            throw std::invalid_argument("malformed rational: " + std::string(text));
        }
        return value;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace cqh
