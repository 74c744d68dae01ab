#pragma once

#include <utility>
#include <vector>

#include "alwyn/errors.hpp"
#include "alwyn/hybrid.hpp"
#include "alwyn/hybrid_sequence.hpp"
#include "alwyn/ring_matrix.hpp"
#include "alwyn/sequence.hpp"

namespace alwyn {

// Q = [[1+p, q-p, -q], [1, 0, 0], [0, 1, 0]]: shifts the sliding window of
// three consecutive terms of the third-order recurrence.
inline RingMatrix<Rational> companion_matrix(const SeqParams& s) {
    return RingMatrix<Rational>(3, 3,
                                {Rational(1) + s.p, s.q - s.p, -s.q,
                                 1, 0, 0,
                                 0, 1, 0});
}

// Third-order sequence x(n+3) = u x(n+2) + v x(n+1) + w x(n) with seeds
// x0 = A (invertible), x1 = B, x2 = C, over a ring S with rational
// recurrence coefficients.
template <typename S>
struct CerecedaParams {
    Rational u;
    Rational v;
    Rational w;
    S A;
    S B;
    S C;
};

// The bordered-tridiagonal display admits two readings of row 3:
//   literal_display  keeps the seed entry A in column 1, as displayed;
//   uniform_interior makes every row from 3 on the constant interior row
//                    [1/w, -v/w, u, w].
enum class CerecedaReading { literal_display, uniform_interior };

// (n+1) x (n+1) bordered tridiagonal whose determinant reproduces x(n)
// under the literal reading.
template <typename S>
RingMatrix<S> cereceda_matrix(const CerecedaParams<S>& cp, int n,
                              CerecedaReading reading) {
    if (n < 0) throw IndexOutOfDomain("matrix order must be >= 0");
    if (cp.w.is_zero()) throw ZeroCoefficient("tridiagonal entries divide by w");
    if (!is_invertible(cp.A))
        throw NonInvertible("seed x0 must be invertible");

    const int size = n + 1;
    const S zero = zero_like(cp.A);
    auto rat = [&](const Rational& v) { return embed_rational(v, cp.A); };
    RingMatrix<S> m = RingMatrix<S>::filled(size, size, zero);

    const Rational inv_w = cp.w.inverse();
    const Rational sub = -cp.v * inv_w;  // -v/w

    auto set = [&](int r, int c, const S& value) {
        if (r < size && c < size) m.at(r, c) = value;
    };

    set(0, 0, cp.A);
    set(0, 1, rat(Rational(1)));
    if (size > 1) {
        set(1, 0, cp.A * cp.u - cp.B);
        set(1, 1, rat(cp.u));
        set(1, 2, inverse(cp.A));
    }
    if (size > 2) {
        set(2, 1, cp.B * cp.u - cp.C);
        set(2, 2, rat(cp.u));
        set(2, 3, rat(cp.w));
    }
    if (size > 3) {
        set(3, 1, reading == CerecedaReading::literal_display ? cp.A : rat(inv_w));
        set(3, 2, rat(sub));
        set(3, 3, rat(cp.u));
        set(3, 4, rat(cp.w));
    }
    for (int i = 4; i < size; ++i) {
        set(i, i - 2, rat(inv_w));
        set(i, i - 1, rat(sub));
        set(i, i, rat(cp.u));
        set(i, i + 1, rat(cp.w));
    }
    return m;
}

// Scalar instance: u = 1+p, v = q-p, w = -q, seeds L(0), L(1), L(2).
inline CerecedaParams<Rational> cereceda_scalar_params(const SeqParams& s) {
    const auto seeds = la_terms(s, 3);
    return {Rational(1) + s.p, s.q - s.p, -s.q, seeds[0], seeds[1], seeds[2]};
}

// Hybrid instance: seeds LaH(0), LaH(1), LaH(2), same coefficients.
inline CerecedaParams<Hybrid<Rational>> cereceda_hybrid_params(const SeqParams& s) {
    const auto seeds = lah_by_recurrence(s, 3);
    return {Rational(1) + s.p, s.q - s.p, -s.q, seeds[0], seeds[1], seeds[2]};
}

// The hybrid proposition's own display differs from the generic construction
// in one spot: its row 4 shows a bare 1/2 where the interior pattern has
// 1/w = -1/q. The literal reading keeps that entry as displayed.
inline RingMatrix<Hybrid<Rational>> lah_cereceda_matrix(const SeqParams& s, int n,
                                                        CerecedaReading reading) {
    auto cp = cereceda_hybrid_params(s);
    RingMatrix<Hybrid<Rational>> m = cereceda_matrix(cp, n, reading);
    if (reading == CerecedaReading::literal_display && n >= 4)
        m.at(4, 2) = Hybrid<Rational>::scalar(Rational(1, 2));
    return m;
}

}  // namespace alwyn
