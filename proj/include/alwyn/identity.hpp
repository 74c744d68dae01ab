#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "alwyn/hybrid.hpp"
#include "alwyn/hybrid_sequence.hpp"
#include "alwyn/rational.hpp"

namespace alwyn::dsl {

// Integer-affine expression over index variables, e.g. n+u-1 or 2*n.
struct AffineIndex {
    long long constant = 0;
    std::vector<std::pair<std::string, long long>> terms;  // sorted by name

    void add_term(const std::string& name, long long coeff);
    long long eval(const std::map<std::string, long long>& bindings) const;
    void collect_vars(std::vector<std::string>& out) const;
    std::string str() const;

    friend bool operator==(const AffineIndex&, const AffineIndex&) = default;
};

enum class SeqFn { la, lah, hpart };
enum class UnitSym { psi, i, eps, h };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Literal { Rational value; };
struct ParamRef { char name; };          // 'p', 'q' or 'r'
struct IndexRef { std::string name; };   // an index variable used as a scalar
struct UnitRef { UnitSym unit; };
struct SeqCall { SeqFn fn; AffineIndex index; };
struct KShiftCall { AffineIndex index; AffineIndex shift; };
struct Conj { ExprPtr arg; };
struct Neg { ExprPtr arg; };
struct Pow { ExprPtr base; long long exponent; };
struct BinOp { char op; ExprPtr lhs; ExprPtr rhs; };  // '+', '-' or '*'

struct Expr {
    std::variant<Literal, ParamRef, IndexRef, UnitRef, SeqCall, KShiftCall,
                 Conj, Neg, Pow, BinOp>
        node;
};

// lhs == rhs, with multiplication order preserved as written.
struct IdentityAst {
    ExprPtr lhs;
    ExprPtr rhs;
    std::string source;
};

// Throws SyntaxError (with 1-based line/column and the expected token set)
// on malformed input.
IdentityAst parse_identity(std::string_view src);

std::string print_expr(const Expr& e);
std::string print_identity(const IdentityAst& ast);

bool equal(const Expr& a, const Expr& b);
inline bool equal(const IdentityAst& a, const IdentityAst& b) {
    return equal(*a.lhs, *b.lhs) && equal(*a.rhs, *b.rhs);
}

// Index variables appearing anywhere in the identity, sorted, deduplicated.
std::vector<std::string> free_index_variables(const IdentityAst& ast);

// Largest value any index expression can take over boxed variable ranges
// [0, range.at(var)]; used to size evaluation contexts.
long long max_index_needed(const IdentityAst& ast,
                           const std::map<std::string, long long>& var_upper);

struct Verdict {
    bool pass;
    Hybrid<Rational> lhs;
    Hybrid<Rational> rhs;
};

// Exact evaluation of both sides over the hybrid ring. Throws
// IndexOutOfDomain when an index expression resolves negative and
// UnboundVariable when a variable has no binding.
Verdict eval_identity(const IdentityAst& ast, const SequenceContext& ctx,
                      const std::map<std::string, long long>& bindings);

// Convenience overload building a context sized for the given bindings.
Verdict eval_identity(const IdentityAst& ast, const SeqParams& params,
                      const std::map<std::string, long long>& bindings);

}  // namespace alwyn::dsl
