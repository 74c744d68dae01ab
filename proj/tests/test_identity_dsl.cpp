#include <doctest.h>

#include "alwyn/harness.hpp"
#include "alwyn/identity.hpp"

using namespace alwyn;
using namespace alwyn::dsl;

using HR = Hybrid<Rational>;

TEST_CASE("parse and print round-trips") {
    const char* sources[] = {
        "LAH(n+1)*LAH(n-1) - LAH(n)^2 == HPART(n)",
        "conj(LAH(n))*LAH(n) == LAH(n)*conj(LAH(n))",
        "PSI*PSI == 4",
        "(1-p-q)^2*(LAH(n+u)*LAH(n+v) - LAH(n)*LAH(n+u+v)) == "
        "HPART(n+u)*HPART(n+v) - HPART(n+u+v)*HPART(n) + "
        "r*(PSI*KSHIFT(n,u) - KSHIFT(n+v,u)*PSI)",
        "-LA(2*n) + 1/2 == p*q*r - I*EPS*H",
        "KSHIFT(n,u+1) == HPART(n) - HPART(n+u+1)",
        "LAH(0) == LA(0) + LA(1)*I + LA(2)*EPS + LA(3)*H",
        "-(LAH(n) - LAH(n)) == 0",
        "LA(n)^0 == 1",
        "(p + q)^3 == (p + q)*(p + q)*(p + q)",
    };
    for (const char* src : sources) {
        const IdentityAst ast = parse_identity(src);
        const std::string printed = print_identity(ast);
        const IdentityAst reparsed = parse_identity(printed);
        CHECK(equal(ast, reparsed));
        // printing is a fixed point after one round
        CHECK(print_identity(reparsed) == printed);
    }
}

TEST_CASE("round-trip on the built-in catalog") {
    for (const auto& entry : builtin_dsl_catalog()) {
        const IdentityAst ast = parse_identity(entry.source);
        CHECK(equal(ast, parse_identity(print_identity(ast))));
    }
}

TEST_CASE("multiplication stays in written order") {
    const IdentityAst ast = parse_identity("LAH(n+1)*LAH(n-1) == LAH(n-1)*LAH(n+1)");
    const SeqParams leo = SeqParams::leonardo();
    // products of distinct hybrid terms do not commute, so the identity fails
    const Verdict verdict = eval_identity(ast, leo, {{"n", 2}});
    CHECK_FALSE(verdict.pass);
    CHECK(verdict.lhs == lah_by_definition(leo, 3) * lah_by_definition(leo, 1));
    CHECK(verdict.rhs == lah_by_definition(leo, 1) * lah_by_definition(leo, 3));
}

TEST_CASE("syntax errors carry positions and expectations") {
    CHECK_THROWS_AS(parse_identity("LAH(n"), SyntaxError);
    try {
        parse_identity("LAH(n");
    } catch (const SyntaxError& e) {
        CHECK(e.line == 1);
        CHECK(e.column == 6);
        CHECK(e.expected == "')'");
    }

    const char* malformed[] = {
        "LAH(n",                      // unclosed paren
        "",                           // empty
        "LAH(n) ==",                  // missing rhs
        "== LAH(n)",                  // missing lhs
        "LAH(n) = LAH(n)",            // single equals
        "LAH() == 0",                 // empty index
        "KSHIFT(n) == 0",             // missing comma arg
        "LAH(n)^(2) == 0",            // parenthesized exponent
        "LAH(n) == 3/",               // dangling slash
        "LAH(n+) == 0",               // dangling +
        "LAH(n) == 4 $",              // stray character
        "conj == 0",                  // call without parens
    };
    for (const char* src : malformed)
        CHECK_THROWS_AS(parse_identity(src), SyntaxError);
}

TEST_CASE("evaluation basics") {
    const SeqParams leo = SeqParams::leonardo();

    const Verdict tauto =
        eval_identity(parse_identity("LAH(n) == LAH(n)"), leo, {{"n", 5}});
    CHECK(tauto.pass);

    // PSI*PSI = 3 + 2i + 2eps + 2h, not the scalar 4
    const Verdict psi2 = eval_identity(parse_identity("PSI*PSI == 4"), leo, {});
    CHECK_FALSE(psi2.pass);
    CHECK(psi2.lhs == HR{3, 2, 2, 2});

    // conj(Z)*Z is the scalar-embedded character
    const Verdict chr = eval_identity(
        parse_identity("conj(LAH(n))*LAH(n) == LAH(n)*conj(LAH(n))"), leo, {{"n", 0}});
    CHECK(chr.pass);
    CHECK(chr.lhs == HR::scalar(character(lah_by_definition(leo, 0))));
    CHECK(chr.lhs.i.is_zero());
    CHECK(chr.lhs.eps.is_zero());
    CHECK(chr.lhs.h.is_zero());
}

TEST_CASE("evaluation errors") {
    const SeqParams leo = SeqParams::leonardo();
    CHECK_THROWS_AS(
        eval_identity(parse_identity("LAH(n-1) == 0"), leo, {{"n", 0}}),
        IndexOutOfDomain);
    CHECK_THROWS_AS(eval_identity(parse_identity("LAH(k) == 0"), leo, {{"n", 0}}),
                    UnboundVariable);
    CHECK_THROWS_AS(
        eval_identity(parse_identity("KSHIFT(n,u) == 0"), leo,
                      {{"n", 0}, {"u", -1}}),
        IndexOutOfDomain);
}

TEST_CASE("free variables and context sizing") {
    const IdentityAst ast =
        parse_identity("LAH(n+u)*LAH(n+v) == LA(m) + KSHIFT(n,u)");
    CHECK(free_index_variables(ast) ==
          std::vector<std::string>{"m", "n", "u", "v"});
    const std::map<std::string, long long> upper{
        {"n", 10}, {"u", 5}, {"v", 5}, {"m", 25}};
    CHECK(max_index_needed(ast, upper) == 25);
    const std::map<std::string, long long> upper2{
        {"n", 10}, {"u", 5}, {"v", 20}, {"m", 3}};
    CHECK(max_index_needed(ast, upper2) == 30);
}

TEST_CASE("dsl cassini matches the hard-coded checker verdicts") {
    // scaled by rho^2 and with the main term in homogeneous-part form;
    // equality of verdicts on the common domain is the oracle equivalence
    const IdentityAst cassini = parse_identity(
        "(1-p-q)^2*(LAH(n+1)*LAH(n-1) - LAH(n)^2) == "
        "HPART(n+1)*HPART(n-1) - HPART(n)^2 + "
        "r*(PSI*KSHIFT(n,1) - KSHIFT(n-1,1)*PSI)");
    GridSpec g;
    g.p_values = {1, -2, 2};
    g.q_values = {1, 3};
    g.r_values = {0, 1, -1};
    g.a_values = {1, 0};
    g.b_values = {1, 2};
    g.n_max = 6;

    for (const auto& s : g.points()) {
        if (s.discriminant().is_zero() || s.rho().is_zero()) continue;
        SequenceContext ctx(s, 8);
        const CharacteristicData& chi = ctx.chi();
        const HybridConstants& hc = ctx.constants();
        const Hybrid<QuadExt> psi_l = lift(hc.psi_unit, chi.d);
        const QuadExt inv_rho2 = chi.embed((s.rho() * s.rho()).inverse());
        for (int n = 1; n <= 6; ++n) {
            const Verdict dsl_verdict = eval_identity(cassini, ctx, {{"n", n}});
            // the displayed Cassini form, straight from its statement
            const HR lhs = ctx.lah(n + 1) * ctx.lah(n - 1) - ctx.lah(n) * ctx.lah(n);
            const QuadExt scale = chi.phi1 * chi.phi2 *
                                  chi.embed((-s.q).pow(n - 1)) * chi.delta /
                                  (chi.delta * chi.delta);
            const Hybrid<QuadExt> main =
                (hc.Psi2 * hc.Psi1 * chi.psi2 - hc.Psi1 * hc.Psi2 * chi.psi1) * scale;
            const Hybrid<QuadExt> k_term =
                (psi_l * k_shift(s, n, 1) - k_shift(s, n - 1, 1) * psi_l) *
                chi.embed(s.r);
            const HR printed = project_rational((main + k_term) * inv_rho2);
            CHECK(dsl_verdict.pass == (lhs == printed));
        }
    }
}
