#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include "levc/errors.hpp"

namespace levc {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number in canonical lowest terms.
//
// Invariants (maintained after every operation):
//   * denominator > 0,
//   * gcd(|numerator|, denominator) = 1,
//   * zero is uniquely 0/1.
//
// Immutable value type; safe to share across threads.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}

    // n/d reduced to canonical form; sign carried by the numerator.
    // Throws DomainError when d == 0.
    Rational(BigInt n, BigInt d);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);  // throws DomainError on /0

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    // Canonical form makes equality a field-by-field comparison.
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const BigInt lhs = a.num_ * b.den_;
        const BigInt rhs = b.num_ * a.den_;
        return lhs < rhs   ? std::strong_ordering::less
               : lhs > rhs ? std::strong_ordering::greater
                           : std::strong_ordering::equal;
    }

    // Canonical text form is always "p/q", q printed even when q = 1,
    // so that parse(str(x)) == x round-trips.
    std::string str() const;

    // Accepts "p/q" (q > 0 after sign normalization) or a bare integer "p".
    static Rational parse(std::string_view text);

    friend std::ostream& operator<<(std::ostream& os, const Rational& x);

private:
    BigInt num_;
    BigInt den_;

    void normalize();
};

// Three-way comparison consistent with real-number order: -1, 0, +1.
inline int cmp(const Rational& a, const Rational& b) {
    const auto o = a <=> b;
    return o < 0 ? -1 : (o > 0 ? 1 : 0);
}

inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

// Correctly rounded decimal rendering with `digits` fractional digits
// (halves round away from zero). Display-only; "p/q" is the canonical form.
// Requires digits >= 1.
std::string to_decimal_string(const Rational& x, int digits);

} // namespace levc

template <>
struct std::hash<levc::Rational> {
    std::size_t operator()(const levc::Rational& x) const noexcept {
        std::size_t h = std::hash<levc::BigInt>{}(x.num());
        h ^= std::hash<levc::BigInt>{}(x.den()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};
