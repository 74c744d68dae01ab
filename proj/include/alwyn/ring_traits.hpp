#pragma once

#include "alwyn/quad_ext.hpp"
#include "alwyn/rational.hpp"

namespace alwyn {

// Zero/one of the same ring as a sample value. QuadExt needs the sample to
// recover the discriminant; plain numeric types ignore it.
inline int zero_like(int) { return 0; }
inline int one_like(int) { return 1; }

inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }

inline QuadExt zero_like(const QuadExt& z) {
    return QuadExt::from_rational(Rational(0), z.discriminant());
}
inline QuadExt one_like(const QuadExt& z) {
    return QuadExt::from_rational(Rational(1), z.discriminant());
}

inline bool ring_is_zero(int v) { return v == 0; }
inline bool ring_is_zero(const Rational& v) { return v.is_zero(); }
inline bool ring_is_zero(const QuadExt& v) { return v.is_zero(); }

// Embed a rational into the ring of `like`.
inline Rational embed_rational(const Rational& v, const Rational&) { return v; }
inline QuadExt embed_rational(const Rational& v, const QuadExt& like) {
    return QuadExt::from_rational(v, like.discriminant());
}

}  // namespace alwyn
