#include "alwyn/identity.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "alwyn/errors.hpp"

namespace alwyn::dsl {

void AffineIndex::add_term(const std::string& name, long long coeff) {
    for (auto& [n, c] : terms) {
        if (n == name) {
            c += coeff;
            if (c == 0)
                terms.erase(std::find_if(terms.begin(), terms.end(),
                                         [&](const auto& t) { return t.first == name; }));
            return;
        }
    }
    if (coeff == 0) return;
    terms.emplace_back(name, coeff);
    std::sort(terms.begin(), terms.end());
}

long long AffineIndex::eval(const std::map<std::string, long long>& bindings) const {
    long long value = constant;
    for (const auto& [name, coeff] : terms) {
        auto found = bindings.find(name);
        if (found == bindings.end())
            throw UnboundVariable("unbound index variable '" + name + "'");
        value += coeff * found->second;
    }
    return value;
}

void AffineIndex::collect_vars(std::vector<std::string>& out) const {
    for (const auto& [name, coeff] : terms) out.push_back(name);
}

std::string AffineIndex::str() const {
    std::string out;
    for (const auto& [name, coeff] : terms) {
        if (coeff < 0)
            out += '-';
        else if (!out.empty())
            out += '+';
        const long long mag = coeff < 0 ? -coeff : coeff;
        if (mag != 1) out += std::to_string(mag) + "*";
        out += name;
    }
    if (constant != 0 || out.empty()) {
        if (constant >= 0 && !out.empty()) out += '+';
        out += std::to_string(constant);
    }
    return out;
}

namespace {

// ---------------------------------------------------------------- lexing

enum class Tok { integer, ident, plus, minus, star, caret, slash, lparen,
                 rparen, comma, eqeq, end };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

const char* tok_name(Tok t) {
    switch (t) {
        case Tok::integer: return "integer";
        case Tok::ident: return "identifier";
        case Tok::plus: return "'+'";
        case Tok::minus: return "'-'";
        case Tok::star: return "'*'";
        case Tok::caret: return "'^'";
        case Tok::slash: return "'/'";
        case Tok::lparen: return "'('";
        case Tok::rparen: return "')'";
        case Tok::comma: return "','";
        case Tok::eqeq: return "'=='";
        case Tok::end: return "end of input";
    }
    return "?";
}

std::vector<Token> lex(std::string_view src) {
    std::vector<Token> out;
    int line = 1, col = 1;
    size_t pos = 0;
    auto advance = [&](size_t count) {
        for (size_t k = 0; k < count; ++k, ++pos) {
            if (src[pos] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (pos < src.size()) {
        const char c = src[pos];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        const int tline = line, tcol = col;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t len = 1;
            while (pos + len < src.size() &&
                   std::isdigit(static_cast<unsigned char>(src[pos + len])))
                ++len;
            out.push_back({Tok::integer, std::string(src.substr(pos, len)), tline, tcol});
            advance(len);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t len = 1;
            while (pos + len < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[pos + len])) ||
                    src[pos + len] == '_'))
                ++len;
            out.push_back({Tok::ident, std::string(src.substr(pos, len)), tline, tcol});
            advance(len);
            continue;
        }
        if (c == '=' && pos + 1 < src.size() && src[pos + 1] == '=') {
            out.push_back({Tok::eqeq, "==", tline, tcol});
            advance(2);
            continue;
        }
        Tok kind;
        switch (c) {
            case '+': kind = Tok::plus; break;
            case '-': kind = Tok::minus; break;
            case '*': kind = Tok::star; break;
            case '^': kind = Tok::caret; break;
            case '/': kind = Tok::slash; break;
            case '(': kind = Tok::lparen; break;
            case ')': kind = Tok::rparen; break;
            case ',': kind = Tok::comma; break;
            default:
                throw SyntaxError(tline, tcol, "token",
                                  "unexpected character '" + std::string(1, c) +
                                      "' at " + std::to_string(tline) + ":" +
                                      std::to_string(tcol));
        }
        out.push_back({kind, std::string(1, c), tline, tcol});
        advance(1);
    }
    out.push_back({Tok::end, "", line, col});
    return out;
}

// --------------------------------------------------------------- parsing

bool is_keyword(const std::string& name) {
    return name == "LA" || name == "LAH" || name == "HPART" || name == "KSHIFT" ||
           name == "conj" || name == "PSI" || name == "I" || name == "EPS" ||
           name == "H";
}

class Parser {
public:
    explicit Parser(std::string_view src) : tokens_(lex(src)) {}

    IdentityAst parse(std::string_view src) {
        ExprPtr lhs = parse_expr();
        expect(Tok::eqeq, "'=='");
        ExprPtr rhs = parse_expr();
        expect(Tok::end, "end of input");
        return {std::move(lhs), std::move(rhs), std::string(src)};
    }

private:
    const Token& peek() const { return tokens_[index_]; }
    Token take() { return tokens_[index_++]; }

    [[noreturn]] void fail(const std::string& expected) {
        const Token& t = peek();
        throw SyntaxError(t.line, t.column, expected,
                          "expected " + expected + " but found " +
                              (t.kind == Tok::end ? std::string(tok_name(Tok::end))
                                                  : "'" + t.text + "'") +
                              " at " + std::to_string(t.line) + ":" +
                              std::to_string(t.column));
    }

    Token expect(Tok kind, const std::string& expected) {
        if (peek().kind != kind) fail(expected);
        return take();
    }

    bool accept(Tok kind) {
        if (peek().kind != kind) return false;
        ++index_;
        return true;
    }

    static ExprPtr make(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

    ExprPtr parse_expr() {
        ExprPtr lhs = parse_term();
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            const char op = take().kind == Tok::plus ? '+' : '-';
            lhs = make(Expr{BinOp{op, std::move(lhs), parse_term()}});
        }
        return lhs;
    }

    ExprPtr parse_term() {
        ExprPtr lhs = parse_factor();
        while (peek().kind == Tok::star) {
            take();
            lhs = make(Expr{BinOp{'*', std::move(lhs), parse_factor()}});
        }
        return lhs;
    }

    long long small_int(const Token& t, const char* expected) {
        try {
            return std::stoll(t.text);
        } catch (const std::out_of_range&) {
            throw SyntaxError(t.line, t.column, expected,
                              "integer '" + t.text + "' out of range at " +
                                  std::to_string(t.line) + ":" +
                                  std::to_string(t.column));
        }
    }

    ExprPtr parse_factor() {
        if (accept(Tok::minus)) return make(Expr{Neg{parse_factor()}});
        ExprPtr base = parse_atom();
        if (accept(Tok::caret)) {
            const Token e = expect(Tok::integer, "nonnegative integer exponent");
            return make(Expr{Pow{std::move(base), small_int(e, "exponent")}});
        }
        return base;
    }

    ExprPtr parse_atom() {
        const Token& t = peek();
        if (t.kind == Tok::integer) {
            take();
            Int num(t.text);
            if (accept(Tok::slash)) {
                const Token den = expect(Tok::integer, "integer denominator");
                return make(Expr{Literal{Rational(num, Int(den.text))}});
            }
            return make(Expr{Literal{Rational(num)}});
        }
        if (t.kind == Tok::lparen) {
            take();
            ExprPtr inner = parse_expr();
            expect(Tok::rparen, "')'");
            return inner;
        }
        if (t.kind != Tok::ident) fail("rational, symbol, call or '('");
        const Token name = take();
        if (name.text == "LA" || name.text == "LAH" || name.text == "HPART") {
            const SeqFn fn = name.text == "LA" ? SeqFn::la
                           : name.text == "LAH" ? SeqFn::lah
                                                : SeqFn::hpart;
            expect(Tok::lparen, "'('");
            AffineIndex index = parse_iexpr();
            expect(Tok::rparen, "')'");
            return make(Expr{SeqCall{fn, std::move(index)}});
        }
        if (name.text == "KSHIFT") {
            expect(Tok::lparen, "'('");
            AffineIndex index = parse_iexpr();
            expect(Tok::comma, "','");
            AffineIndex shift = parse_iexpr();
            expect(Tok::rparen, "')'");
            return make(Expr{KShiftCall{std::move(index), std::move(shift)}});
        }
        if (name.text == "conj") {
            expect(Tok::lparen, "'('");
            ExprPtr arg = parse_expr();
            expect(Tok::rparen, "')'");
            return make(Expr{Conj{std::move(arg)}});
        }
        if (name.text == "PSI") return make(Expr{UnitRef{UnitSym::psi}});
        if (name.text == "I") return make(Expr{UnitRef{UnitSym::i}});
        if (name.text == "EPS") return make(Expr{UnitRef{UnitSym::eps}});
        if (name.text == "H") return make(Expr{UnitRef{UnitSym::h}});
        if (name.text == "p" || name.text == "q" || name.text == "r")
            return make(Expr{ParamRef{name.text[0]}});
        return make(Expr{IndexRef{name.text}});
    }

    // Integer-affine expression over index variables.
    AffineIndex parse_iexpr() {
        AffineIndex out;
        long long sign = 1;
        if (accept(Tok::minus))
            sign = -1;
        else
            accept(Tok::plus);
        parse_iterm(out, sign);
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            sign = take().kind == Tok::plus ? 1 : -1;
            parse_iterm(out, sign);
        }
        return out;
    }

    void parse_iterm(AffineIndex& out, long long sign) {
        const Token& t = peek();
        if (t.kind == Tok::integer) {
            const Token tok = take();
            const long long value = small_int(tok, "index term");
            if (accept(Tok::star)) {
                const Token var = expect(Tok::ident, "index variable");
                if (is_keyword(var.text)) fail("index variable");
                out.add_term(var.text, sign * value);
            } else {
                out.constant += sign * value;
            }
            return;
        }
        if (t.kind == Tok::ident && !is_keyword(t.text)) {
            take();
            out.add_term(t.text, sign);
            return;
        }
        fail("integer or index variable");
    }

    std::vector<Token> tokens_;
    size_t index_ = 0;
};

// -------------------------------------------------------------- printing

// Precedence levels: additive 1, multiplicative 2, prefix minus 3,
// power 4, atoms 5. Each node's printer parenthesizes children that bind
// looser than the grammar slot requires, so print-then-parse is identity.
int precedence(const Expr& e) {
    return std::visit(
        [](const auto& node) -> int {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, BinOp>)
                return node.op == '*' ? 2 : 1;
            else if constexpr (std::is_same_v<T, Neg>)
                return 3;
            else if constexpr (std::is_same_v<T, Pow>)
                return 4;
            else
                return 5;
        },
        e.node);
}

std::string print_child(const Expr& e, int min_prec) {
    const std::string inner = print_expr(e);
    return precedence(e) < min_prec ? "(" + inner + ")" : inner;
}

}  // namespace

std::string print_expr(const Expr& e) {
    return std::visit(
        [](const auto& node) -> std::string {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, Literal>) {
                return node.value.str();
            } else if constexpr (std::is_same_v<T, ParamRef>) {
                return std::string(1, node.name);
            } else if constexpr (std::is_same_v<T, IndexRef>) {
                return node.name;
            } else if constexpr (std::is_same_v<T, UnitRef>) {
                switch (node.unit) {
                    case UnitSym::psi: return "PSI";
                    case UnitSym::i: return "I";
                    case UnitSym::eps: return "EPS";
                    case UnitSym::h: return "H";
                }
                return "?";
            } else if constexpr (std::is_same_v<T, SeqCall>) {
                const char* fn = node.fn == SeqFn::la ? "LA"
                               : node.fn == SeqFn::lah ? "LAH"
                                                       : "HPART";
                return std::string(fn) + "(" + node.index.str() + ")";
            } else if constexpr (std::is_same_v<T, KShiftCall>) {
                return "KSHIFT(" + node.index.str() + "," + node.shift.str() + ")";
            } else if constexpr (std::is_same_v<T, Conj>) {
                return "conj(" + print_expr(*node.arg) + ")";
            } else if constexpr (std::is_same_v<T, Neg>) {
                return "-" + print_child(*node.arg, 3);
            } else if constexpr (std::is_same_v<T, Pow>) {
                return print_child(*node.base, 5) + "^" + std::to_string(node.exponent);
            } else {
                const BinOp& b = node;
                const int prec = b.op == '*' ? 2 : 1;
                return print_child(*b.lhs, prec) + b.op + print_child(*b.rhs, prec + 1);
            }
        },
        e.node);
}

std::string print_identity(const IdentityAst& ast) {
    return print_expr(*ast.lhs) + " == " + print_expr(*ast.rhs);
}

IdentityAst parse_identity(std::string_view src) {
    if (src.find_first_not_of(" \t\r\n") == std::string_view::npos)
        throw SyntaxError(1, 1, "identity", "empty identity source");
    return Parser(src).parse(src);
}

bool equal(const Expr& a, const Expr& b) {
    if (a.node.index() != b.node.index()) return false;
    return std::visit(
        [&](const auto& lhs) -> bool {
            using T = std::decay_t<decltype(lhs)>;
            const auto& rhs = std::get<T>(b.node);
            if constexpr (std::is_same_v<T, Literal>) {
                return lhs.value == rhs.value;
            } else if constexpr (std::is_same_v<T, ParamRef>) {
                return lhs.name == rhs.name;
            } else if constexpr (std::is_same_v<T, IndexRef>) {
                return lhs.name == rhs.name;
            } else if constexpr (std::is_same_v<T, UnitRef>) {
                return lhs.unit == rhs.unit;
            } else if constexpr (std::is_same_v<T, SeqCall>) {
                return lhs.fn == rhs.fn && lhs.index == rhs.index;
            } else if constexpr (std::is_same_v<T, KShiftCall>) {
                return lhs.index == rhs.index && lhs.shift == rhs.shift;
            } else if constexpr (std::is_same_v<T, Conj>) {
                return equal(*lhs.arg, *rhs.arg);
            } else if constexpr (std::is_same_v<T, Neg>) {
                return equal(*lhs.arg, *rhs.arg);
            } else if constexpr (std::is_same_v<T, Pow>) {
                return lhs.exponent == rhs.exponent && equal(*lhs.base, *rhs.base);
            } else {
                return lhs.op == rhs.op && equal(*lhs.lhs, *rhs.lhs) &&
                       equal(*lhs.rhs, *rhs.rhs);
            }
        },
        a.node);
}

namespace {

void walk_vars(const Expr& e, std::vector<std::string>& out) {
    std::visit(
        [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, IndexRef>) {
                out.push_back(node.name);
            } else if constexpr (std::is_same_v<T, SeqCall>) {
                node.index.collect_vars(out);
            } else if constexpr (std::is_same_v<T, KShiftCall>) {
                node.index.collect_vars(out);
                node.shift.collect_vars(out);
            } else if constexpr (std::is_same_v<T, Conj> || std::is_same_v<T, Neg>) {
                walk_vars(*node.arg, out);
            } else if constexpr (std::is_same_v<T, Pow>) {
                walk_vars(*node.base, out);
            } else if constexpr (std::is_same_v<T, BinOp>) {
                walk_vars(*node.lhs, out);
                walk_vars(*node.rhs, out);
            }
        },
        e.node);
}

// Maximum of an affine form over [0, upper] boxes: take each term at the
// endpoint matching its coefficient sign.
long long affine_max(const AffineIndex& affine,
                     const std::map<std::string, long long>& var_upper) {
    long long value = affine.constant;
    for (const auto& [name, coeff] : affine.terms) {
        auto found = var_upper.find(name);
        if (found == var_upper.end())
            throw UnboundVariable("unbound index variable '" + name + "'");
        if (coeff > 0) value += coeff * found->second;
    }
    return value;
}

void walk_max_index(const Expr& e, const std::map<std::string, long long>& upper,
                    long long& best) {
    std::visit(
        [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, SeqCall>) {
                best = std::max(best, affine_max(node.index, upper));
            } else if constexpr (std::is_same_v<T, KShiftCall>) {
                best = std::max(best,
                                affine_max(node.index, upper) +
                                    std::max<long long>(0, affine_max(node.shift, upper)));
            } else if constexpr (std::is_same_v<T, Conj> || std::is_same_v<T, Neg>) {
                walk_max_index(*node.arg, upper, best);
            } else if constexpr (std::is_same_v<T, Pow>) {
                walk_max_index(*node.base, upper, best);
            } else if constexpr (std::is_same_v<T, BinOp>) {
                walk_max_index(*node.lhs, upper, best);
                walk_max_index(*node.rhs, upper, best);
            }
        },
        e.node);
}

Hybrid<Rational> eval_expr(const Expr& e, const SequenceContext& ctx,
                           const std::map<std::string, long long>& bindings) {
    return std::visit(
        [&](const auto& node) -> Hybrid<Rational> {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, Literal>) {
                return Hybrid<Rational>::scalar(node.value);
            } else if constexpr (std::is_same_v<T, ParamRef>) {
                const SeqParams& s = ctx.params();
                return Hybrid<Rational>::scalar(node.name == 'p' ? s.p
                                              : node.name == 'q' ? s.q
                                                                 : s.r);
            } else if constexpr (std::is_same_v<T, IndexRef>) {
                auto found = bindings.find(node.name);
                if (found == bindings.end())
                    throw UnboundVariable("unbound index variable '" + node.name + "'");
                return Hybrid<Rational>::scalar(Rational(found->second));
            } else if constexpr (std::is_same_v<T, UnitRef>) {
                switch (node.unit) {
                    case UnitSym::psi: return Hybrid<Rational>{1, 1, 1, 1};
                    case UnitSym::i: return Hybrid<Rational>{0, 1, 0, 0};
                    case UnitSym::eps: return Hybrid<Rational>{0, 0, 1, 0};
                    case UnitSym::h: return Hybrid<Rational>{0, 0, 0, 1};
                }
                throw Error("unreachable unit symbol");
            } else if constexpr (std::is_same_v<T, SeqCall>) {
                const long long idx = node.index.eval(bindings);
                if (idx < 0)
                    throw IndexOutOfDomain("index expression '" + node.index.str() +
                                           "' resolved to " + std::to_string(idx));
                switch (node.fn) {
                    case SeqFn::la: return Hybrid<Rational>::scalar(ctx.la(idx));
                    case SeqFn::lah: return ctx.lah(idx);
                    case SeqFn::hpart: return ctx.hpart(idx);
                }
                throw Error("unreachable sequence accessor");
            } else if constexpr (std::is_same_v<T, KShiftCall>) {
                const long long idx = node.index.eval(bindings);
                const long long shift = node.shift.eval(bindings);
                if (idx < 0 || shift < 0)
                    throw IndexOutOfDomain("KSHIFT arguments resolved to (" +
                                           std::to_string(idx) + "," +
                                           std::to_string(shift) + ")");
                return ctx.kshift(idx, shift);
            } else if constexpr (std::is_same_v<T, Conj>) {
                return hybrid_conj(eval_expr(*node.arg, ctx, bindings));
            } else if constexpr (std::is_same_v<T, Neg>) {
                return -eval_expr(*node.arg, ctx, bindings);
            } else if constexpr (std::is_same_v<T, Pow>) {
                return eval_expr(*node.base, ctx, bindings).pow(node.exponent);
            } else {
                const BinOp& b = node;
                const Hybrid<Rational> lhs = eval_expr(*b.lhs, ctx, bindings);
                const Hybrid<Rational> rhs = eval_expr(*b.rhs, ctx, bindings);
                switch (b.op) {
                    case '+': return lhs + rhs;
                    case '-': return lhs - rhs;
                    case '*': return lhs * rhs;
                }
                throw Error("unreachable operator");
            }
        },
        e.node);
}

}  // namespace

std::vector<std::string> free_index_variables(const IdentityAst& ast) {
    std::vector<std::string> vars;
    walk_vars(*ast.lhs, vars);
    walk_vars(*ast.rhs, vars);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

long long max_index_needed(const IdentityAst& ast,
                           const std::map<std::string, long long>& var_upper) {
    long long best = 0;
    walk_max_index(*ast.lhs, var_upper, best);
    walk_max_index(*ast.rhs, var_upper, best);
    return best;
}

Verdict eval_identity(const IdentityAst& ast, const SequenceContext& ctx,
                      const std::map<std::string, long long>& bindings) {
    Hybrid<Rational> lhs = eval_expr(*ast.lhs, ctx, bindings);
    Hybrid<Rational> rhs = eval_expr(*ast.rhs, ctx, bindings);
    const bool pass = lhs == rhs;
    return {pass, std::move(lhs), std::move(rhs)};
}

Verdict eval_identity(const IdentityAst& ast, const SeqParams& params,
                      const std::map<std::string, long long>& bindings) {
    std::map<std::string, long long> upper;
    for (const auto& [name, value] : bindings) upper[name] = value;
    const long long size = std::max<long long>(0, max_index_needed(ast, upper));
    SequenceContext ctx(params, static_cast<int>(size));
    return eval_identity(ast, ctx, bindings);
}

}  // namespace alwyn::dsl
