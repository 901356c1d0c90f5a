#pragma once

#include "pellseq/quadrat.hpp"
#include "pellseq/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pellseq {

/// The named sequence families. T, L, B, C, E satisfy X_n = 6X_{n−1} − X_{n−2};
/// R satisfies R_n = 2R_{n−1} + R_{n−2}; NSW is derived as C_n / 2.
enum class Family { T, L, B, C, E, NSW, R };

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

/// A second-order integer recurrence X_n = p·X_{n−1} + q·X_{n−2} with |q| = 1,
/// defined for all integer indices (|q| = 1 makes the step invertible).
struct RecurrenceSpec {
    long p;
    long q;
    BigInt seed0;
    BigInt seed1;

    RecurrenceSpec(long pp, long qq, BigInt s0, BigInt s1)
        : p(pp), q(qq), seed0(std::move(s0)), seed1(std::move(s1)) {
        if (q != 1 && q != -1)
            throw std::invalid_argument("RecurrenceSpec: |q| must be 1");
    }
};

/// Spec for a named family. NSW has no spec of its own (it is C_n / 2).
RecurrenceSpec family_spec(Family f);

/// Exact n-th term by iteration, both directions.
BigInt term(const RecurrenceSpec& spec, long long n);

/// Exact n-th term by companion-matrix binary powering, O(log|n|) bigint
/// multiplications. Negative n powers the exact integer inverse matrix.
BigInt term_fast(const RecurrenceSpec& spec, long long n);

/// n-th term of a named family; NSW asserts C_n is even before halving.
BigInt family_term(Family f, long long n);

/// Coefficients of the closed form A_n = c1·α^n + c2·β^n.
struct ClosedFormCoeffs {
    QuadRat c1;
    QuadRat c2;
};

/// Solves c1 + c2 = r, c1·α + c2·β = s exactly (always solvable, α ≠ β).
ClosedFormCoeffs closed_form_coeffs(const BigInt& r, const BigInt& s);

/// First `count` Taylor coefficients of
///   g(x) = (r + (s−7r)x + (6r−s)x²) / ((1−x)(1−6x+x²)),
/// computed by expanding the rational function against its cubic denominator.
/// This is an independent route to the same sequence as term(·).
std::vector<BigInt> gf_prefix(const BigInt& r, const BigInt& s, long long count);

struct RelationFailure {
    std::string relation;
    long long n;
};

struct RelationReport {
    std::optional<RelationFailure> first_failure;
    bool ok() const { return !first_failure.has_value(); }
};

/// Checks, exactly, for every n in [lo, hi]:
///   B_n = T_{n+1} − T_n,  E_n = (L_{n+1}+L_n)/2 = 4B_n,
///   C_n = 2(T_{n+1}+T_n) = (L_{n+1}−L_n)/2,  NSW_n = R_{2n+1}.
RelationReport cross_relations_check(long long lo, long long hi);

}  // namespace pellseq
