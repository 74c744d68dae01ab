#pragma once

#include <ostream>
#include <string>
#include <utility>

#include "alwyn/errors.hpp"
#include "alwyn/rational.hpp"

namespace alwyn {

// Element x + y·t of the quotient ring Q[t]/(t^2 - D), D != 0.
//
// The ring is used even when D is a perfect square, with componentwise
// equality. Division multiplies by the conjugate and therefore fails
// exactly when x^2 - D*y^2 == 0, which can only happen for square D.
class QuadExt {
public:
    QuadExt(Rational x, Rational y, Rational d)
        : x_(std::move(x)), y_(std::move(y)), d_(std::move(d)) {
        if (d_.is_zero()) throw InvalidParams("discriminant must be nonzero");
    }

    static QuadExt from_rational(Rational x, Rational d) {
        return QuadExt(std::move(x), Rational(0), std::move(d));
    }

    // The generator t itself (so t*t == D).
    static QuadExt surd(Rational d) {
        return QuadExt(Rational(0), Rational(1), std::move(d));
    }

    const Rational& rat_part() const { return x_; }
    const Rational& surd_part() const { return y_; }
    const Rational& discriminant() const { return d_; }

    bool is_zero() const { return x_.is_zero() && y_.is_zero(); }
    bool is_rational() const { return y_.is_zero(); }

    // x^2 - D*y^2; multiplicative, zero exactly on the non-invertible elements.
    Rational norm() const { return x_ * x_ - d_ * y_ * y_; }

    QuadExt conj() const { return QuadExt(x_, -y_, d_); }

    friend QuadExt operator-(const QuadExt& z) {
        return QuadExt(-z.x_, -z.y_, z.d_);
    }

    friend QuadExt operator+(const QuadExt& a, const QuadExt& b) {
        check_same_ring(a, b);
        return QuadExt(a.x_ + b.x_, a.y_ + b.y_, a.d_);
    }
    friend QuadExt operator-(const QuadExt& a, const QuadExt& b) {
        check_same_ring(a, b);
        return QuadExt(a.x_ - b.x_, a.y_ - b.y_, a.d_);
    }
    friend QuadExt operator*(const QuadExt& a, const QuadExt& b) {
        check_same_ring(a, b);
        return QuadExt(a.x_ * b.x_ + a.d_ * a.y_ * b.y_,
                       a.x_ * b.y_ + a.y_ * b.x_, a.d_);
    }
    friend QuadExt operator/(const QuadExt& a, const QuadExt& b) {
        check_same_ring(a, b);
        return a * b.inverse();
    }

    QuadExt& operator+=(const QuadExt& z) { return *this = *this + z; }
    QuadExt& operator-=(const QuadExt& z) { return *this = *this - z; }
    QuadExt& operator*=(const QuadExt& z) { return *this = *this * z; }
    QuadExt& operator/=(const QuadExt& z) { return *this = *this / z; }

    QuadExt operator*(const Rational& s) const {
        return QuadExt(x_ * s, y_ * s, d_);
    }

    QuadExt inverse() const {
        const Rational n = norm();
        if (n.is_zero())
            throw NonInvertible("quadratic extension element with zero norm: " + str());
        return QuadExt(x_ / n, -y_ / n, d_);
    }

    QuadExt pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        QuadExt base = *this;
        QuadExt acc = from_rational(Rational(1), d_);
        while (e > 0) {
            if (e & 1) acc *= base;
            if (e >>= 1) base *= base;
        }
        return acc;
    }

    // Quotient-ring semantics: equal iff both components and D agree.
    friend bool operator==(const QuadExt& a, const QuadExt& b) {
        return a.d_ == b.d_ && a.x_ == b.x_ && a.y_ == b.y_;
    }
    friend bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }

    std::string str() const {
        return x_.str() + (y_.sign() >= 0 ? "+" : "") + y_.str() + "t";
    }

    friend std::ostream& operator<<(std::ostream& os, const QuadExt& z) {
        return os << z.str();
    }

private:
    static void check_same_ring(const QuadExt& a, const QuadExt& b) {
        if (a.d_ != b.d_)
            throw DiscriminantMismatch("discriminant mismatch: " + a.d_.str() +
                                       " vs " + b.d_.str());
    }

    Rational x_;
    Rational y_;
    Rational d_;
};

inline QuadExt operator*(const Rational& s, const QuadExt& z) { return z * s; }

inline QuadExt surd_conjugate(const QuadExt& z) { return z.conj(); }

inline bool is_invertible(const QuadExt& z) { return !z.norm().is_zero(); }
inline QuadExt inverse(const QuadExt& z) { return z.inverse(); }

}  // namespace alwyn
