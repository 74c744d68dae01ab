#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "alwyn/errors.hpp"

namespace alwyn {

using Int = boost::multiprecision::cpp_int;

// Arbitrary-precision rational in canonical form: den > 0 and
// gcd(|num|, den) == 1 after every operation.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int v) : num_(v), den_(1) {}                 // NOLINT(runtime/explicit)
    Rational(long long v) : num_(v), den_(1) {}           // NOLINT(runtime/explicit)
    Rational(Int v) : num_(std::move(v)), den_(1) {}      // NOLINT(runtime/explicit)

    Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ == 0) throw DivisionByZero();
        normalize();
    }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    friend Rational operator-(const Rational& x) {
        return Rational(-x.num_, x.den_, no_normalize{});
    }

    friend Rational operator+(const Rational& x, const Rational& y) {
        return Rational(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
    }
    friend Rational operator-(const Rational& x, const Rational& y) {
        return Rational(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
    }
    friend Rational operator*(const Rational& x, const Rational& y) {
        return Rational(x.num_ * y.num_, x.den_ * y.den_);
    }
    friend Rational operator/(const Rational& x, const Rational& y) {
        if (y.num_ == 0) throw DivisionByZero();
        return Rational(x.num_ * y.den_, x.den_ * y.num_);
    }

    Rational& operator+=(const Rational& y) { return *this = *this + y; }
    Rational& operator-=(const Rational& y) { return *this = *this - y; }
    Rational& operator*=(const Rational& y) { return *this = *this * y; }
    Rational& operator/=(const Rational& y) { return *this = *this / y; }

    // Canonical form makes componentwise comparison exact.
    friend bool operator==(const Rational& x, const Rational& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
        const Int l = x.num_ * y.den_;
        const Int r = y.num_ * x.den_;
        return l < r ? std::strong_ordering::less
             : l > r ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    Rational abs() const {
        return num_ < 0 ? Rational(-num_, den_, no_normalize{}) : *this;
    }

    Rational inverse() const {
        if (num_ == 0) throw DivisionByZero();
        return num_ < 0 ? Rational(-den_, -num_, no_normalize{})
                        : Rational(den_, num_, no_normalize{});
    }

    Rational pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        Rational base = *this;
        Rational acc = 1;
        while (e > 0) {
            if (e & 1) acc *= base;
            if (e >>= 1) base *= base;
        }
        return acc;
    }

    // "num/den", with "/den" omitted for integers: "5/6", "-5/2", "3".
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) {
            s += '/';
            s += den_.str();
        }
        return s;
    }

    // Accepts the same shape str() emits, plus surrounding whitespace.
    static Rational parse(std::string_view text);

    friend std::ostream& operator<<(std::ostream& os, const Rational& x) {
        return os << x.str();
    }

private:
    struct no_normalize {};
    Rational(Int num, Int den, no_normalize) : num_(std::move(num)), den_(std::move(den)) {}

    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Int g = boost::multiprecision::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    Int num_;
    Int den_;
};

inline Rational Rational::parse(std::string_view text) {
    size_t begin = text.find_first_not_of(" \t");
    size_t end = text.find_last_not_of(" \t");
    if (begin == std::string_view::npos)
        throw InvalidParams("empty rational literal");
    text = text.substr(begin, end - begin + 1);

    const size_t slash = text.find('/');
    auto parse_int = [](std::string_view part) {
        if (part.empty()) throw InvalidParams("malformed rational literal");
        size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) throw InvalidParams("malformed rational literal");
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9')
                throw InvalidParams("malformed rational literal: '" + std::string(part) + "'");
        return Int(std::string(part));
    };

    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

inline bool is_invertible(const Rational& x) { return !x.is_zero(); }
inline Rational inverse(const Rational& x) { return x.inverse(); }

}  // namespace alwyn
