#pragma once

#include <string>
#include <vector>

#include "alwyn/errors.hpp"
#include "alwyn/quad_ext.hpp"
#include "alwyn/rational.hpp"

namespace alwyn {

// Parameters (p, q, r, a, b) of a generalized Leonardo-Alwyn instance:
//
//   L(0) = a, L(1) = b, L(n+2) = p*L(n+1) + q*L(n) + r,
//
// equivalently the third-order homogeneous recurrence
//
//   L(n+3) = (1+p)*L(n+2) + (q-p)*L(n+1) - q*L(n)
//
// seeded with L(2) = p*b + q*a + r. Requires D = p^2 + 4q != 0.
struct SeqParams {
    Rational p;
    Rational q;
    Rational r;
    Rational a;
    Rational b;

    Rational discriminant() const { return p * p + Rational(4) * q; }
    Rational rho() const { return Rational(1) - p - q; }

    void validate() const {
        if (discriminant().is_zero())
            throw InvalidParams("p^2 + 4q must be nonzero (p=" + p.str() +
                                ", q=" + q.str() + ")");
    }

    static SeqParams leonardo() { return {1, 1, 1, 1, 1}; }
    static SeqParams ernst() { return {1, 2, 1, 1, 1}; }

    std::string str() const {
        return "p=" + p.str() + " q=" + q.str() + " r=" + r.str() +
               " a=" + a.str() + " b=" + b.str();
    }

    friend bool operator==(const SeqParams& x, const SeqParams& y) {
        return x.p == y.p && x.q == y.q && x.r == y.r && x.a == y.a && x.b == y.b;
    }
};

// Characteristic data of the second-order part x^2 = p*x + q: the roots
// psi_{1,2} = (p +- t)/2 live in Q[t]/(t^2 - D), and the Binet weights are
//
//   phi_j = ((1-p-q)a - r)*psi_j + (1-p-q)b + (p^2+pq-p)a + (p-1)r.
struct CharacteristicData {
    Rational d;      // p^2 + 4q
    Rational rho;    // 1 - p - q
    QuadExt psi1;
    QuadExt psi2;
    QuadExt delta;   // psi1 - psi2 = t
    QuadExt phi1;
    QuadExt phi2;

    static CharacteristicData from(const SeqParams& s) {
        s.validate();
        const Rational d = s.discriminant();
        const Rational half(1, 2);
        const QuadExt psi1(s.p * half, half, d);
        const QuadExt psi2(s.p * half, -half, d);
        const Rational rho = s.rho();
        const Rational h0 = rho * s.a - s.r;
        const Rational c =
            rho * s.b + (s.p * s.p + s.p * s.q - s.p) * s.a + (s.p - Rational(1)) * s.r;
        const QuadExt phi1 = psi1 * h0 + QuadExt::from_rational(c, d);
        const QuadExt phi2 = psi2 * h0 + QuadExt::from_rational(c, d);
        return {d, rho, psi1, psi2, QuadExt::surd(d), phi1, phi2};
    }

    QuadExt embed(const Rational& v) const { return QuadExt::from_rational(v, d); }
};

// First `count` terms via the third-order homogeneous recurrence.
inline std::vector<Rational> la_terms(const SeqParams& s, int count) {
    s.validate();
    if (count < 0) throw InvalidParams("term count must be >= 0");
    std::vector<Rational> out;
    out.reserve(count);
    const Rational seeds[3] = {s.a, s.b, s.p * s.b + s.q * s.a + s.r};
    for (int n = 0; n < count && n < 3; ++n) out.push_back(seeds[n]);
    const Rational c2 = Rational(1) + s.p;
    const Rational c1 = s.q - s.p;
    for (int n = 3; n < count; ++n)
        out.push_back(c2 * out[n - 1] + c1 * out[n - 2] - s.q * out[n - 3]);
    return out;
}

// Same sequence via the inhomogeneous second-order form; kept separate so
// the two routes can be compared exactly.
inline std::vector<Rational> la_terms_second_order(const SeqParams& s, int count) {
    s.validate();
    if (count < 0) throw InvalidParams("term count must be >= 0");
    std::vector<Rational> out;
    out.reserve(count);
    if (count > 0) out.push_back(s.a);
    if (count > 1) out.push_back(s.b);
    for (int n = 2; n < count; ++n)
        out.push_back(s.p * out[n - 1] + s.q * out[n - 2] + s.r);
    return out;
}

namespace detail {
// The scalar homogeneous part as an element of Q[t]/(t^2-D); antisymmetry
// of the numerator under t -> -t forces the surd part to vanish.
inline QuadExt homogeneous_part_quad(const CharacteristicData& chi, long long m) {
    const QuadExt num = chi.phi1 * chi.psi1.pow(m) - chi.phi2 * chi.psi2.pow(m);
    return num / chi.delta;
}

inline Rational require_rational(const QuadExt& z, const char* what) {
    if (!z.is_rational())
        throw Error(std::string(what) + " has nonzero surd part: " + z.str());
    return z.rat_part();
}
}  // namespace detail

// H(m) = (phi1*psi1^m - phi2*psi2^m) / (psi1 - psi2). Defined for every
// valid parameter set; rho plays no role here.
inline Rational homogeneous_part(const SeqParams& s, long long m) {
    if (m < 0) throw IndexOutOfDomain("homogeneous_part index must be >= 0");
    const CharacteristicData chi = CharacteristicData::from(s);
    return detail::require_rational(detail::homogeneous_part_quad(chi, m),
                                    "homogeneous part");
}

// Closed form L(n) = (r + H(n)) / (1-p-q); needs rho != 0.
inline Rational la_binet(const SeqParams& s, long long n) {
    if (n < 0) throw IndexOutOfDomain("la_binet index must be >= 0");
    const CharacteristicData chi = CharacteristicData::from(s);
    if (chi.rho.is_zero())
        throw DegenerateParameters("closed form needs 1 - p - q != 0");
    const Rational h = detail::require_rational(
        detail::homogeneous_part_quad(chi, n), "Binet numerator");
    return (s.r + h) / chi.rho;
}

enum class SpecialCase { leonardo, ernst };

// Independent cross-checks from Remark-level formulas:
//   Le(n) = 2*F(n+1) - 1 with Fibonacci F(1) = F(2) = 1,
//   Er(n) = (3*J(n+1) - 1) / 2 with Jacobsthal J(0) = 0, J(1) = 1.
inline Rational special_case_oracle(SpecialCase kind, int n) {
    if (n < 0) throw IndexOutOfDomain("oracle index must be >= 0");
    if (kind == SpecialCase::leonardo) {
        Int f0 = 0, f1 = 1;  // F(0), F(1)
        for (int k = 0; k < n; ++k) {
            Int next = f0 + f1;
            f0 = f1;
            f1 = next;
        }
        return Rational(2 * f1 - 1);
    }
    Int j0 = 0, j1 = 1;
    for (int k = 0; k < n; ++k) {
        Int next = j1 + 2 * j0;
        j0 = j1;
        j1 = next;
    }
    return Rational(3 * j1 - 1) / Rational(2);
}

}  // namespace alwyn
