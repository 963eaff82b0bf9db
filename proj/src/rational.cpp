#include "crofton/rational.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace crofton {

namespace {

using wide = __int128;

std::int64_t narrow(wide v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < -std::numeric_limits<std::int64_t>::max())
        throw std::overflow_error("rational overflow");
    return static_cast<std::int64_t>(v);
}

wide gcd_wide(wide a, wide b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        wide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Rational make(wide n, wide d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    wide g = gcd_wide(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return Rational(narrow(n), narrow(d));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        if (num == std::numeric_limits<std::int64_t>::min() || den == std::numeric_limits<std::int64_t>::min())
            throw std::overflow_error("rational overflow");
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    num_ = num;
    den_ = den;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    std::size_t used = 0;
    if (slash == std::string::npos) {
        std::int64_t n = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument("bad rational: " + text);
        return Rational(n);
    }
    std::string a = text.substr(0, slash), b = text.substr(slash + 1);
    std::int64_t n = std::stoll(a, &used);
    if (used != a.size()) throw std::invalid_argument("bad rational: " + text);
    std::int64_t d = std::stoll(b, &used);
    if (used != b.size()) throw std::invalid_argument("bad rational: " + text);
    return Rational(n, d);
}

Rational Rational::operator-() const { return make(-static_cast<wide>(num_), den_); }

Rational& Rational::operator+=(const Rational& o) {
    return *this = make(static_cast<wide>(num_) * o.den_ + static_cast<wide>(o.num_) * den_,
                        static_cast<wide>(den_) * o.den_);
}

Rational& Rational::operator-=(const Rational& o) {
    return *this = make(static_cast<wide>(num_) * o.den_ - static_cast<wide>(o.num_) * den_,
                        static_cast<wide>(den_) * o.den_);
}

Rational& Rational::operator*=(const Rational& o) {
    return *this = make(static_cast<wide>(num_) * o.num_, static_cast<wide>(den_) * o.den_);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    return *this = make(static_cast<wide>(num_) * o.den_, static_cast<wide>(den_) * o.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    wide l = static_cast<wide>(a.num_) * b.den_;
    wide r = static_cast<wide>(b.num_) * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational abs(const Rational& r) { return r.num() < 0 ? -r : r; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace crofton
