#pragma once

#include "pellseq/exppoly.hpp"
#include "pellseq/rational.hpp"
#include "pellseq/sequences.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace pellseq {

// Identity DSL, EBNF (whitespace insignificant):
//   identity   := expr ("==" expr)+ ;
//   expr       := term (("+"|"-") term)* ;
//   term       := factor (("*" factor) | factor)* ;     adjacency means product
//   factor     := atom ("^" nat)? | atom "/" rational ;
//   atom       := rational | familyterm | "(" expr ")" | "-" atom ;
//   familyterm := ("T"|"L"|"B"|"C"|"E") "(" index ")" ;
//   index      := [int] "n" (("+"|"-") nat)? | int ;
//   rational   := int ("/" nat)? ;

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct RatLit { Rational value; };
struct FamTerm { Family fam; long long a; long long b; };  // F(a·n + b)
struct Neg { ExprPtr e; };
struct Add { ExprPtr lhs, rhs; };
struct Sub { ExprPtr lhs, rhs; };
struct Mul { ExprPtr lhs, rhs; };
struct Pow { ExprPtr base; unsigned long long exp; };
struct DivRat { ExprPtr num; Rational den; };  // division only by nonzero rational literals

struct Expr {
    std::variant<RatLit, FamTerm, Neg, Add, Sub, Mul, Pow, DivRat> node;
};

/// Parsed identity: two or more expression sides chained by "==".
struct IdentityAst {
    std::vector<ExprPtr> sides;
};

class ParseError : public std::runtime_error {
public:
    ParseError(size_t offset, std::string expected);
    size_t offset() const { return offset_; }
    const std::string& expected() const { return expected_; }

private:
    size_t offset_;
    std::string expected_;
};

/// Parses the DSL; throws ParseError with byte offset and expected tokens.
IdentityAst parse_identity(std::string_view text);

/// Compiles an expression to its canonical exponential polynomial.
ExpPoly compile_expr(const ExprPtr& e);

/// Evaluates an expression at a concrete n using the integer recurrences
/// directly — an exact numeric route independent of the ExpPoly engine.
Rational eval_expr(const ExprPtr& e, long long n);

struct Counterexample {
    long long n;
    QuadRat lhs_value;
    QuadRat rhs_value;
};

struct ProofOutcome {
    std::optional<Counterexample> counterexample;
    bool proven() const { return !counterexample.has_value(); }
};

/// Decides the identity exactly: Proven iff all pairwise side differences are
/// the zero map; otherwise returns the smallest witness in the scan order
/// n = 0, 1, −1, 2, −2, …
ProofOutcome prove(const IdentityAst& ast);

/// First n in [lo, hi] where the sides disagree under eval_expr, if any.
std::optional<long long> numeric_sweep_failure(const IdentityAst& ast, long long lo, long long hi);

struct CorpusEntry {
    std::string name;
    std::string text;
};

/// The built-in identity catalog; every entry is expected to prove.
const std::vector<CorpusEntry>& corpus();

/// Corpus entry by name.
std::optional<CorpusEntry> corpus_entry(const std::string& name);

}  // namespace pellseq
