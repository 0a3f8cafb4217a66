#include "levc/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <charconv>
#include <ostream>
#include <utility>

namespace levc {

namespace mp = boost::multiprecision;

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw DomainError("rational with zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = mp::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw DomainError("rational division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

std::string Rational::str() const {
    return num_.str() + "/" + den_.str();
}

Rational Rational::parse(std::string_view text) {
    const auto bad = [&] { return ParseError("malformed rational '" + std::string(text) + "'"); };
    if (text.empty()) throw bad();
    const auto slash = text.find('/');
    const auto parse_int = [&](std::string_view s) -> BigInt {
        if (s.empty()) throw bad();
        const bool negative = s[0] == '-';
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw bad();
        for (std::size_t j = i; j < s.size(); ++j)
            if (s[j] < '0' || s[j] > '9') throw bad();
        BigInt v(std::string(s.substr(i)));
        return negative ? BigInt(-v) : v;
    };
    BigInt n = parse_int(text.substr(0, slash));
    if (slash == std::string_view::npos) return Rational(std::move(n));
    BigInt d = parse_int(text.substr(slash + 1));
    if (d == 0) throw bad();
    return Rational(std::move(n), std::move(d));
}

std::ostream& operator<<(std::ostream& os, const Rational& x) {
    return os << x.str();
}

std::string to_decimal_string(const Rational& x, int digits) {
    if (digits < 1) throw DomainError("to_decimal_string requires digits >= 1");
    BigInt scale = mp::pow(BigInt(10), static_cast<unsigned>(digits));
    BigInt n = x.num() < 0 ? BigInt(-x.num()) : x.num();
    BigInt scaled = n * scale;
    BigInt q = scaled / x.den();
    BigInt r = scaled % x.den();
    if (2 * r >= x.den()) ++q;
    BigInt whole = q / scale;
    std::string frac = BigInt(q % scale).str();
    std::string out;
    if (x.sign() < 0) out += '-';
    out += whole.str();
    out += '.';
    out.append(static_cast<std::size_t>(digits) - frac.size(), '0');
    out += frac;
    return out;
}

} // namespace levc
