#include <doctest.h>

#include "alwyn/quad_ext.hpp"
#include "alwyn/rational.hpp"
#include "alwyn/sequence.hpp"
#include "test_util.hpp"

using namespace alwyn;

TEST_CASE("rational arithmetic examples") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(0) * Rational(7, 3) == Rational(0));
    CHECK(Rational(1) / Rational(-2, 5) == Rational(-5, 2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
    CHECK_THROWS_AS(Rational(Int(3), Int(0)), DivisionByZero);
}

TEST_CASE("rational canonical form") {
    CHECK(Rational(Int(4), Int(-6)) == Rational(-2, 3));
    CHECK(Rational(Int(4), Int(-6)).den() == 3);
    CHECK(Rational(Int(0), Int(7)).den() == 1);

    testutil::Gen gen(11);
    for (int k = 0; k < 300; ++k) {
        const Rational x = gen.rational(1000, 500);
        CHECK(x.den() > 0);
        CHECK(boost::multiprecision::gcd(x.num() < 0 ? Int(-x.num()) : x.num(),
                                         x.den()) <= 1);
    }
}

TEST_CASE("rational ring laws on random triples") {
    testutil::Gen gen(17);
    for (int k = 0; k < 300; ++k) {
        const Rational x = gen.rational(), y = gen.rational(), z = gen.rational();
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * y == y * x);
        CHECK(x + y == y + x);
        CHECK(x * (y + z) == x * y + x * z);
    }
}

TEST_CASE("rational string round trip") {
    CHECK(Rational(5, 6).str() == "5/6");
    CHECK(Rational(-5, 2).str() == "-5/2");
    CHECK(Rational(3).str() == "3");
    CHECK(Rational::parse("5/6") == Rational(5, 6));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational::parse(" 4/6 ") == Rational(2, 3));
    CHECK_THROWS_AS(Rational::parse("x"), InvalidParams);
    CHECK_THROWS_AS(Rational::parse(""), InvalidParams);

    testutil::Gen gen(23);
    for (int k = 0; k < 200; ++k) {
        const Rational x = gen.rational(10000, 997);
        CHECK(Rational::parse(x.str()) == x);
    }
}

TEST_CASE("rational pow and ordering") {
    CHECK(Rational(-2, 3).pow(3) == Rational(-8, 27));
    CHECK(Rational(2).pow(-2) == Rational(1, 4));
    CHECK(Rational(0).pow(0) == Rational(1));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1).abs() == Rational(1));
}

namespace {
const Rational kD5(5);
QuadExt qe(long long x, long long y) { return QuadExt(Rational(x), Rational(y), kD5); }
}  // namespace

TEST_CASE("quadratic extension examples") {
    CHECK(qe(1, 1) * qe(1, -1) == qe(-4, 0));
    CHECK(qe(1, 0) / qe(0, 1) == QuadExt(Rational(0), Rational(1, 5), kD5));

    // roots for p = q = 1 live in D = 5
    const SeqParams s{1, 1, 1, 1, 1};
    const CharacteristicData chi = CharacteristicData::from(s);
    CHECK(chi.psi1 + chi.psi2 == QuadExt::from_rational(Rational(1), kD5));
    CHECK(chi.psi1 * chi.psi2 == QuadExt::from_rational(Rational(-1), kD5));
    CHECK(chi.psi1 - chi.psi2 == QuadExt::surd(kD5));
}

TEST_CASE("surd conjugation") {
    CHECK(surd_conjugate(qe(3, 2)) == qe(3, -2));
    CHECK(surd_conjugate(surd_conjugate(qe(3, 2))) == qe(3, 2));
    CHECK(surd_conjugate(qe(5, 0)) == qe(5, 0));

    const SeqParams s{1, 1, 1, 1, 1};
    const CharacteristicData chi = CharacteristicData::from(s);
    CHECK(surd_conjugate(chi.psi1) == chi.psi2);
}

TEST_CASE("quadratic extension errors") {
    CHECK_THROWS_AS(qe(1, 1) + QuadExt(Rational(1), Rational(1), Rational(7)),
                    DiscriminantMismatch);
    CHECK_THROWS_AS(QuadExt(Rational(0), Rational(0), Rational(0)), InvalidParams);
    // x^2 - D y^2 = 0 is reachable only for square D
    const QuadExt bad(Rational(2), Rational(1), Rational(4));
    CHECK_THROWS_AS(bad.inverse(), NonInvertible);
    CHECK(QuadExt(Rational(2), Rational(1), Rational(5)).inverse() *
              QuadExt(Rational(2), Rational(1), Rational(5)) ==
          QuadExt::from_rational(Rational(1), Rational(5)));
}

TEST_CASE("quadratic extension ring laws") {
    testutil::Gen gen(29);
    for (int k = 0; k < 200; ++k) {
        const QuadExt x = gen.quad(kD5), y = gen.quad(kD5), z = gen.quad(kD5);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * y == y * x);
        CHECK(x * (y + z) == x * y + x * z);
    }
}

TEST_CASE("root relations hold for every valid parameter set") {
    testutil::Gen gen(31);
    for (int k = 0; k < 100; ++k) {
        const SeqParams s{gen.rational(5, 3), gen.rational(5, 3), gen.rational(),
                          gen.rational(), gen.rational()};
        if (s.discriminant().is_zero()) continue;
        const CharacteristicData chi = CharacteristicData::from(s);
        CHECK(chi.psi1 + chi.psi2 == chi.embed(s.p));
        CHECK(chi.psi1 * chi.psi2 == chi.embed(-s.q));
        CHECK(chi.psi1 - chi.psi2 == QuadExt::surd(chi.d));
        // psi^2 = p psi + q
        CHECK(chi.psi1 * chi.psi1 == chi.psi1 * chi.embed(s.p) + chi.embed(s.q));
        CHECK(chi.psi2 * chi.psi2 == chi.psi2 * chi.embed(s.p) + chi.embed(s.q));
    }
}

TEST_CASE("surd-symmetric expressions are rational") {
    testutil::Gen gen(37);
    for (int k = 0; k < 50; ++k) {
        const SeqParams s{gen.integer(-4, 4), gen.integer(-4, 4), gen.rational(),
                          gen.rational(), gen.rational()};
        if (s.discriminant().is_zero()) continue;
        const CharacteristicData chi = CharacteristicData::from(s);
        for (int e = 0; e <= 6; ++e)
            CHECK((chi.psi1.pow(e) + chi.psi2.pow(e)).is_rational());
    }
}

TEST_CASE("quad_ext serialization shape") {
    CHECK(qe(3, -2).str() == "3-2t");
    CHECK(qe(0, 0).str() == "0+0t");
}
