#include "pellseq/identity.hpp"

#include <cctype>
#include <stdexcept>

namespace pellseq {

ParseError::ParseError(size_t offset, std::string expected)
    : std::runtime_error("parse error at offset " + std::to_string(offset) + ": expected " +
                         expected),
      offset_(offset),
      expected_(std::move(expected)) {}

namespace {

template <class T>
ExprPtr make(T&& node) {
    return std::make_shared<Expr>(Expr{std::forward<T>(node)});
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    IdentityAst parse() {
        IdentityAst ast;
        ast.sides.push_back(parse_expr());
        skip_ws();
        if (!look("==")) fail("'=='");
        while (look("==")) {
            pos_ += 2;
            ast.sides.push_back(parse_expr());
            skip_ws();
        }
        if (pos_ != text_.size()) fail("'==' or end of input");
        return ast;
    }

private:
    std::string_view text_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& expected) { throw ParseError(pos_, expected); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    bool look(std::string_view s) const { return text_.substr(pos_, s.size()) == s; }
    void expect(char c, const std::string& what) {
        if (peek() != c) fail(what);
        ++pos_;
    }
    static bool is_digit(char c) { return c >= '0' && c <= '9'; }
    static bool is_family_char(char c) {
        return c == 'T' || c == 'L' || c == 'B' || c == 'C' || c == 'E';
    }

    ExprPtr parse_expr() {
        ExprPtr node = parse_term();
        while (true) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                node = make(Add{node, parse_term()});
            } else if (peek() == '-') {
                ++pos_;
                node = make(Sub{node, parse_term()});
            } else {
                break;
            }
        }
        return node;
    }

    ExprPtr parse_term() {
        ExprPtr node = parse_factor();
        while (true) {
            skip_ws();
            char c = peek();
            if (c == '*') {
                ++pos_;
                node = make(Mul{node, parse_factor()});
            } else if (is_digit(c) || is_family_char(c) || c == '(') {
                // adjacency means product; unary '-' never continues a term
                node = make(Mul{node, parse_factor()});
            } else {
                break;
            }
        }
        return node;
    }

    ExprPtr parse_factor() {
        ExprPtr atom = parse_atom();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            return make(Pow{atom, parse_nat("exponent")});
        }
        if (peek() == '/') {
            ++pos_;
            skip_ws();
            size_t at = pos_;
            Rational den = parse_rational();
            if (den.is_zero()) throw ParseError(at, "nonzero rational divisor");
            return make(DivRat{atom, den});
        }
        return atom;
    }

    ExprPtr parse_atom() {
        skip_ws();
        char c = peek();
        if (c == '-') {
            ++pos_;
            return make(Neg{parse_atom()});
        }
        if (c == '(') {
            ++pos_;
            ExprPtr e = parse_expr();
            skip_ws();
            expect(')', "')'");
            return e;
        }
        if (is_digit(c)) return make(RatLit{parse_rational()});
        if (std::isalpha(static_cast<unsigned char>(c))) {
            if (!is_family_char(c)) fail("family name (one of T, L, B, C, E)");
            Family fam = *family_from_name(std::string(1, c));
            ++pos_;
            skip_ws();
            expect('(', "'('");
            auto [a, b] = parse_index();
            skip_ws();
            expect(')', "')'");
            return make(FamTerm{fam, a, b});
        }
        fail("a rational literal, family term, '(' or '-'");
    }

    std::pair<long long, long long> parse_index() {
        skip_ws();
        bool has_int = false;
        long long lead = 0;
        if (peek() == '-' || is_digit(peek())) {
            lead = parse_int("integer index coefficient");
            has_int = true;
        }
        skip_ws();
        if (peek() == 'n') {
            ++pos_;
            long long a = has_int ? lead : 1;
            long long b = 0;
            skip_ws();
            if (peek() == '+' || peek() == '-') {
                int sign = (peek() == '-') ? -1 : 1;
                ++pos_;
                skip_ws();
                b = sign * static_cast<long long>(parse_nat("index offset"));
            }
            return {a, b};
        }
        if (!has_int) fail("index of the form [k]n[+c|-c] or an integer");
        return {0, lead};
    }

    unsigned long long parse_nat(const std::string& what) {
        if (!is_digit(peek())) fail(what);
        size_t start = pos_;
        while (is_digit(peek())) ++pos_;
        if (pos_ - start > 9) throw ParseError(start, what + " with at most 9 digits");
        return std::stoull(std::string(text_.substr(start, pos_ - start)));
    }

    long long parse_int(const std::string& what) {
        long long sign = 1;
        if (peek() == '-') {
            sign = -1;
            ++pos_;
        }
        return sign * static_cast<long long>(parse_nat(what));
    }

    Rational parse_rational() {
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
            skip_ws();
        }
        BigInt num = parse_bigint("integer");
        if (neg) num = -num;
        skip_ws();
        if (peek() == '/') {
            ++pos_;
            skip_ws();
            size_t at = pos_;
            BigInt den = parse_bigint("denominator");
            if (den == 0) throw ParseError(at, "nonzero denominator");
            return {num, den};
        }
        return {num};
    }

    BigInt parse_bigint(const std::string& what) {
        if (!is_digit(peek())) fail(what);
        size_t start = pos_;
        while (is_digit(peek())) ++pos_;
        return BigInt(std::string(text_.substr(start, pos_ - start)), 10);
    }
};

struct CompileVisitor {
    ExpPoly operator()(const RatLit& r) const { return ExpPoly::constant(QuadRat(r.value)); }
    ExpPoly operator()(const FamTerm& f) const { return from_family(f.fam, f.a, f.b); }
    ExpPoly operator()(const Neg& e) const { return -compile_expr(e.e); }
    ExpPoly operator()(const Add& e) const { return compile_expr(e.lhs) + compile_expr(e.rhs); }
    ExpPoly operator()(const Sub& e) const { return compile_expr(e.lhs) - compile_expr(e.rhs); }
    ExpPoly operator()(const Mul& e) const { return compile_expr(e.lhs) * compile_expr(e.rhs); }
    ExpPoly operator()(const Pow& e) const { return compile_expr(e.base).pow(e.exp); }
    ExpPoly operator()(const DivRat& e) const {
        return compile_expr(e.num).scale(QuadRat(e.den.inverse()));
    }
};

struct EvalVisitor {
    long long n;
    Rational operator()(const RatLit& r) const { return r.value; }
    Rational operator()(const FamTerm& f) const {
        return Rational(family_term(f.fam, f.a * n + f.b));
    }
    Rational operator()(const Neg& e) const { return -eval_expr(e.e, n); }
    Rational operator()(const Add& e) const { return eval_expr(e.lhs, n) + eval_expr(e.rhs, n); }
    Rational operator()(const Sub& e) const { return eval_expr(e.lhs, n) - eval_expr(e.rhs, n); }
    Rational operator()(const Mul& e) const { return eval_expr(e.lhs, n) * eval_expr(e.rhs, n); }
    Rational operator()(const Pow& e) const {
        Rational base = eval_expr(e.base, n), acc(1);
        for (unsigned long long i = 0; i < e.exp; ++i) acc *= base;
        return acc;
    }
    Rational operator()(const DivRat& e) const { return eval_expr(e.num, n) / e.den; }
};

}  // namespace

IdentityAst parse_identity(std::string_view text) { return Parser(text).parse(); }

ExpPoly compile_expr(const ExprPtr& e) { return std::visit(CompileVisitor{}, e->node); }

Rational eval_expr(const ExprPtr& e, long long n) { return std::visit(EvalVisitor{n}, e->node); }

ProofOutcome prove(const IdentityAst& ast) {
    if (ast.sides.size() < 2) throw std::invalid_argument("prove: need at least two sides");
    std::vector<ExpPoly> polys;
    polys.reserve(ast.sides.size());
    for (const ExprPtr& side : ast.sides) polys.push_back(compile_expr(side));
    for (size_t i = 0; i < polys.size(); ++i) {
        for (size_t j = i + 1; j < polys.size(); ++j) {
            ExpPoly diff = polys[i] - polys[j];
            if (diff.is_zero()) continue;
            // A nonzero sum of t terms with distinct positive bases γ^k has
            // fewer than t integer zeros, so a witness sits within |n| <= t.
            long long bound =
                std::max<long long>(16, static_cast<long long>(diff.term_count()) + 1);
            for (long long t = 0; t <= bound; ++t) {
                for (long long n : {t, -t}) {
                    QuadRat lv = polys[i].eval(n), rv = polys[j].eval(n);
                    if (lv != rv) return {Counterexample{n, lv, rv}};
                    if (t == 0) break;
                }
            }
            throw std::logic_error("prove: nonzero difference admitted no witness");
        }
    }
    return {};
}

std::optional<long long> numeric_sweep_failure(const IdentityAst& ast, long long lo, long long hi) {
    for (long long n = lo; n <= hi; ++n) {
        Rational first = eval_expr(ast.sides.front(), n);
        for (size_t i = 1; i < ast.sides.size(); ++i)
            if (eval_expr(ast.sides[i], n) != first) return n;
    }
    return std::nullopt;
}

const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries{
        {"sq1", "L(n)^2 == L(2n) + 2"},
        {"sq2", "(8T(n))^2 == 2(L(2n) - 2)"},
        {"sq3", "C(n)^2 == L(2n+1) - 2"},
        {"sq4", "E(n)^2 == 2(L(2n+1) + 2)"},
        {"p1", "4(8T(n)^2 + 1) == L(n)^2"},
        {"p2", "2C(n)^2 + 8 == E(n)^2"},
        {"p3", "4(2B(n)^2 - 1) == C(n)^2"},
        {"tsq", "T(n)^2 - 6T(n)T(n+1) + T(n+1)^2 == 1"},
        {"i9", "T(2n+1)B(n-1) == (1 + T(2n))B(n) == (C(3n) + C(n+1))/16"},
        {"i10", "T(2n)L(n-1) == (1 + T(2n-1))L(n) == T(3n-1) + T(n+1)"},
        {"i13", "(T(2n) - 1)C(n) == T(2n+1)C(n-1) == (B(3n) - B(n+1))/2"},
        {"i14", "(T(2n+1) - 1)T(n+1) == T(n)T(2n+2) == (L(3n+2) - L(n+2))/32"},
        {"rel1", "B(n) == T(n+1) - T(n)"},
        {"rel2", "E(n) == 4B(n)"},
        {"rel3", "C(n) == 2(T(n+1) + T(n))"},
        {"rel4", "2C(n) == L(n+1) - L(n)"},
        {"rel5", "2E(n) == L(n+1) + L(n)"},
    };
    return entries;
}

std::optional<CorpusEntry> corpus_entry(const std::string& name) {
    for (const CorpusEntry& e : corpus())
        if (e.name == name) return e;
    return std::nullopt;
}

}  // namespace pellseq
