#pragma once

#include <array>
#include <ostream>
#include <string>
#include <utility>

#include "alwyn/errors.hpp"
#include "alwyn/quad_ext.hpp"
#include "alwyn/rational.hpp"
#include "alwyn/ring_matrix.hpp"
#include "alwyn/ring_traits.hpp"

namespace alwyn {

// Hybrid number a + b*i + c*eps + d*h over a commutative scalar ring S,
// with unit relations i^2 = -1, eps^2 = 0, h^2 = 1, ih = -hi = eps + i.
// Addition is componentwise; the product below is the bilinear expansion
// of the basis multiplication table. It is associative but NOT commutative.
template <typename S>
struct Hybrid {
    S re;
    S i;
    S eps;
    S h;

    static Hybrid scalar(const S& s) {
        return {s, zero_like(s), zero_like(s), zero_like(s)};
    }

    // Basis element k in the order 1, i, eps, h.
    static Hybrid unit(int k, const S& like) {
        Hybrid z = scalar(zero_like(like));
        const S one = one_like(like);
        switch (k) {
            case 0: z.re = one; break;
            case 1: z.i = one; break;
            case 2: z.eps = one; break;
            case 3: z.h = one; break;
            default: throw Error("hybrid unit index out of range");
        }
        return z;
    }

    const S& component(int k) const {
        switch (k) {
            case 0: return re;
            case 1: return i;
            case 2: return eps;
            case 3: return h;
            default: throw Error("hybrid component index out of range");
        }
    }

    bool is_zero() const {
        return ring_is_zero(re) && ring_is_zero(i) && ring_is_zero(eps) &&
               ring_is_zero(h);
    }

    friend Hybrid operator-(const Hybrid& z) { return {-z.re, -z.i, -z.eps, -z.h}; }

    friend Hybrid operator+(const Hybrid& x, const Hybrid& y) {
        return {x.re + y.re, x.i + y.i, x.eps + y.eps, x.h + y.h};
    }
    friend Hybrid operator-(const Hybrid& x, const Hybrid& y) {
        return {x.re - y.re, x.i - y.i, x.eps - y.eps, x.h - y.h};
    }

    friend Hybrid operator*(const Hybrid& x, const Hybrid& y) {
        return {
            x.re * y.re - x.i * y.i + x.i * y.eps + x.eps * y.i + x.h * y.h,
            x.re * y.i + x.i * y.re + x.i * y.h - x.h * y.i,
            x.re * y.eps + x.eps * y.re + x.i * y.h - x.h * y.i - x.eps * y.h +
                x.h * y.eps,
            x.re * y.h + x.h * y.re - x.i * y.eps + x.eps * y.i,
        };
    }

    // Scalars are central: componentwise scaling on either side.
    friend Hybrid operator*(const Hybrid& x, const S& s) {
        return {x.re * s, x.i * s, x.eps * s, x.h * s};
    }
    friend Hybrid operator*(const S& s, const Hybrid& x) { return x * s; }

    Hybrid& operator+=(const Hybrid& y) { return *this = *this + y; }
    Hybrid& operator-=(const Hybrid& y) { return *this = *this - y; }
    Hybrid& operator*=(const Hybrid& y) { return *this = *this * y; }

    Hybrid pow(long long e) const {
        if (e < 0) throw Error("negative hybrid power");
        Hybrid acc = scalar(one_like(re));
        Hybrid base = *this;
        while (e > 0) {
            if (e & 1) acc *= base;
            if (e >>= 1) base *= base;
        }
        return acc;
    }

    friend bool operator==(const Hybrid& x, const Hybrid& y) {
        return x.re == y.re && x.i == y.i && x.eps == y.eps && x.h == y.h;
    }
    friend bool operator!=(const Hybrid& x, const Hybrid& y) { return !(x == y); }

    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Hybrid& z) {
        return os << z.str();
    }
};

template <typename S>
Hybrid<S> hybrid_conj(const Hybrid<S>& z) {
    return {z.re, -z.i, -z.eps, -z.h};
}

// The character C(Z) = a^2 + (b-c)^2 - c^2 - d^2; equals Z * conj(Z),
// whose i, eps, h parts always vanish.
template <typename S>
S character(const Hybrid<S>& z) {
    const S bc = z.i - z.eps;
    return z.re * z.re + bc * bc - z.eps * z.eps - z.h * z.h;
}

inline Rational character_abs(const Hybrid<Rational>& z) {
    return character(z).abs();
}

// z^-1 = conj(z) / C(z); defined exactly when the character is invertible.
template <typename S>
Hybrid<S> hybrid_inverse(const Hybrid<S>& z) {
    const S c = character(z);
    if (!is_invertible(c))
        throw NonInvertible("hybrid number with non-invertible character");
    return hybrid_conj(z) * inverse(c);
}

// Faithful 2x2 representation Z -> [[a+c, b-c+d], [c-b+d, a-c]].
// Multiplicative, and det o rep = character.
template <typename S>
RingMatrix<S> matrix_rep(const Hybrid<S>& z) {
    return RingMatrix<S>(2, 2,
                         {z.re + z.eps, z.i - z.eps + z.h,
                          z.eps - z.i + z.h, z.re - z.eps});
}

// Products of the basis elements {1, i, eps, h} as precomputed constants.
using UnitTable = std::array<std::array<Hybrid<int>, 4>, 4>;

inline const UnitTable& unit_table() {
    static const UnitTable table = {{
        // 1 * {1, i, eps, h}
        {{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}},
        // i * {1, i, eps, h} = i, -1, 1-h, eps+i
        {{{0, 1, 0, 0}, {-1, 0, 0, 0}, {1, 0, 0, -1}, {0, 1, 1, 0}}},
        // eps * {1, i, eps, h} = eps, 1+h, 0, -eps
        {{{0, 0, 1, 0}, {1, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, -1, 0}}},
        // h * {1, i, eps, h} = h, -(eps+i), eps, 1
        {{{0, 0, 0, 1}, {0, -1, -1, 0}, {0, 0, 1, 0}, {1, 0, 0, 0}}},
    }};
    return table;
}

template <typename S>
bool is_invertible(const Hybrid<S>& z) {
    return is_invertible(character(z));
}
template <typename S>
Hybrid<S> inverse(const Hybrid<S>& z) {
    return hybrid_inverse(z);
}

template <typename S>
bool ring_is_zero(const Hybrid<S>& z) {
    return z.is_zero();
}
template <typename S>
Hybrid<S> embed_rational(const Rational& v, const Hybrid<S>& like) {
    return Hybrid<S>::scalar(embed_rational(v, like.re));
}
template <typename S>
Hybrid<S> zero_like(const Hybrid<S>& z) {
    return Hybrid<S>::scalar(zero_like(z.re));
}
template <typename S>
Hybrid<S> one_like(const Hybrid<S>& z) {
    return Hybrid<S>::scalar(one_like(z.re));
}

// Componentwise surd conjugation; commutes with the hybrid product.
inline Hybrid<QuadExt> surd_conjugate(const Hybrid<QuadExt>& z) {
    return {z.re.conj(), z.i.conj(), z.eps.conj(), z.h.conj()};
}

inline Hybrid<QuadExt> lift(const Hybrid<Rational>& z, const Rational& d) {
    return {QuadExt::from_rational(z.re, d), QuadExt::from_rational(z.i, d),
            QuadExt::from_rational(z.eps, d), QuadExt::from_rational(z.h, d)};
}

// Projection used after Binet-style evaluations, where antisymmetry under
// surd conjugation guarantees every component has surd part zero.
inline Hybrid<Rational> project_rational(const Hybrid<QuadExt>& z) {
    for (int k = 0; k < 4; ++k)
        if (!z.component(k).is_rational())
            throw Error("hybrid component has nonzero surd part: " + z.str());
    return {z.re.rat_part(), z.i.rat_part(), z.eps.rat_part(), z.h.rat_part()};
}

namespace detail {
inline std::string scalar_str(int v) { return std::to_string(v); }
inline std::string scalar_str(const Rational& v) { return v.str(); }
inline std::string scalar_str(const QuadExt& v) { return "(" + v.str() + ")"; }
}  // namespace detail

template <typename S>
std::string Hybrid<S>::str() const {
    static const char* names[4] = {"", "i", "eps", "h"};
    std::string out;
    for (int k = 0; k < 4; ++k) {
        const std::string part = detail::scalar_str(component(k));
        if (!out.empty() && part[0] != '-') out += '+';
        out += part;
        out += names[k];
    }
    return out;
}

}  // namespace alwyn
