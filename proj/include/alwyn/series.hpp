#pragma once

#include <array>
#include <vector>

#include "alwyn/errors.hpp"
#include "alwyn/hybrid.hpp"
#include "alwyn/hybrid_sequence.hpp"
#include "alwyn/sequence.hpp"

namespace alwyn {

// Truncated power series with hybrid coefficients; coeffs[m] multiplies t^m.
// t is central, so scalar-coefficient series act componentwise.
struct HybridSeries {
    std::vector<Hybrid<Rational>> coeffs;

    int order() const { return static_cast<int>(coeffs.size()); }
};

// Numerator LaH(0) + (LaH(1) - (1+p)LaH(0)) t
//           + (LaH(2) - (1+p)LaH(1) - (q-p)LaH(0)) t^2,
// recomputed from the hybrid sequence.
inline std::array<Hybrid<Rational>, 3> ogf_numerator(const SeqParams& s) {
    const auto lah = lah_by_recurrence(s, 3);
    const Rational c1 = Rational(1) + s.p;
    const Rational c2 = s.q - s.p;
    return {lah[0], lah[1] - lah[0] * c1, lah[2] - lah[1] * c1 - lah[0] * c2};
}

// Denominator 1 - (1+p) t - (q-p) t^2 + q t^3 as its coefficient list.
inline std::array<Rational, 4> ogf_denominator(const SeqParams& s) {
    return {Rational(1), -(Rational(1) + s.p), -(s.q - s.p), s.q};
}

// Long division of the numerator by the denominator; the denominator has
// scalar coefficients with constant term 1, so division over the hybrid
// ring is well defined.
inline HybridSeries expand_ogf(const SeqParams& s, int order) {
    s.validate();
    if (order < 1) throw InvalidParams("series order must be >= 1");
    const auto num = ogf_numerator(s);
    const auto den = ogf_denominator(s);
    HybridSeries out;
    out.coeffs.reserve(order);
    const Hybrid<Rational> zero = Hybrid<Rational>::scalar(Rational(0));
    for (int m = 0; m < order; ++m) {
        Hybrid<Rational> c = m < 3 ? num[m] : zero;
        for (int k = 1; k <= 3 && k <= m; ++k) c -= out.coeffs[m - k] * den[k];
        out.coeffs.push_back(std::move(c));
    }
    return out;
}

// Product of a scalar-coefficient polynomial with a hybrid series,
// truncated to the series order; used to check den * series == num.
inline HybridSeries multiply_scalar_poly(const std::array<Rational, 4>& poly,
                                         const HybridSeries& series) {
    HybridSeries out;
    const Hybrid<Rational> zero = Hybrid<Rational>::scalar(Rational(0));
    out.coeffs.assign(series.coeffs.size(), zero);
    for (size_t m = 0; m < out.coeffs.size(); ++m)
        for (size_t k = 0; k <= 3 && k <= m; ++k)
            out.coeffs[m] += series.coeffs[m - k] * poly[k];
    return out;
}

// Exact m-th Taylor coefficient of the exponential generating function
// (times m!): (1/rho) [ r Psi + (phi1 Psi1 psi1^m - phi2 Psi2 psi2^m) / delta ].
// No transcendental evaluation; the e^t factors contribute exactly these
// coefficients.
inline Hybrid<Rational> egf_taylor_coefficient(const SeqParams& s, long long m) {
    if (m < 0) throw IndexOutOfDomain("coefficient index must be >= 0");
    const CharacteristicData chi = CharacteristicData::from(s);
    if (chi.rho.is_zero())
        throw DegenerateParameters("closed form needs 1 - p - q != 0");
    const HybridConstants hc = HybridConstants::from(chi);
    const QuadExt inv_delta = chi.delta.inverse();
    const Hybrid<QuadExt> num =
        lift(hc.psi_unit * s.r, chi.d) +
        (hc.Psi1 * (chi.phi1 * inv_delta)) * chi.psi1.pow(m) -
        (hc.Psi2 * (chi.phi2 * inv_delta)) * chi.psi2.pow(m);
    return project_rational(num) * chi.rho.inverse();
}

}  // namespace alwyn
