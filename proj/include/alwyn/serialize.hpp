#pragma once

#include <json.hpp>

#include "alwyn/hybrid.hpp"
#include "alwyn/quad_ext.hpp"
#include "alwyn/rational.hpp"
#include "alwyn/ring_matrix.hpp"
#include "alwyn/sequence.hpp"

namespace alwyn {

using Json = nlohmann::json;

// Rationals serialize as "num/den" with the denominator omitted when 1.
inline Json to_json(const Rational& v) { return v.str(); }

// QuadExt serializes as {"x", "y", "D"}; D is a JSON integer whenever it is
// integral (it always is on the default grids), a "num/den" string otherwise.
inline Json to_json(const QuadExt& z) {
    Json d;
    if (z.discriminant().is_integer())
        d = static_cast<long long>(z.discriminant().num());
    else
        d = z.discriminant().str();
    return Json{{"x", z.rat_part().str()}, {"y", z.surd_part().str()}, {"D", d}};
}

template <typename S>
Json to_json(const Hybrid<S>& z) {
    return Json{{"re", to_json(z.re)},
                {"i", to_json(z.i)},
                {"eps", to_json(z.eps)},
                {"h", to_json(z.h)}};
}

template <typename S>
Json to_json(const RingMatrix<S>& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json to_json(const SeqParams& s) {
    return Json{{"p", s.p.str()},
                {"q", s.q.str()},
                {"r", s.r.str()},
                {"a", s.a.str()},
                {"b", s.b.str()}};
}

}  // namespace alwyn
