#pragma once

#include "pellseq/rational.hpp"
#include "pellseq/sequences.hpp"

#include <optional>
#include <vector>

namespace pellseq {

/// Integer seed (r, s) of the sequence A_0 = r, A_1 = s, A_n = 6A_{n−1} − A_{n−2}.
struct SeedPair {
    BigInt r;
    BigInt s;
};

/// Q = r² + s² − 6rs, constant along the sequence: it equals
/// A_n² + A_{n+1}² − 6·A_n·A_{n+1} for every n.
BigInt invariant_q(const SeedPair& seed);

/// A_n for the given seed.
BigInt seed_term(const SeedPair& seed, long long n);

struct EqualityReport {
    BigInt lhs;
    BigInt rhs;
    bool equal() const { return lhs == rhs; }
};

/// Exact check of 32A_n² + 2Q = (r²−s²)·L_{2n−2} + (6s²−2rs)·L_{2n−1}.
/// Inequality signals an implementation bug; the identity is a theorem.
EqualityReport fundamental_check(const SeedPair& seed, long long n);

/// The cascade a_0 = 2rs − 6s², a_1 = r² − s², a_n = 6a_{n−1} − a_{n−2},
/// extended to negative indices by inverting the recurrence.
class Cascade {
public:
    explicit Cascade(const SeedPair& seed);
    BigInt at(long long k) const;

private:
    RecurrenceSpec spec_;
};

/// Exact check of 32A_n² + 2Q = a_{m+3}·L_{2n+m} − a_{m+2}·L_{2n+m+1}.
/// m = −2 is the fundamental equation; any integer m works under the
/// two-sided cascade.
EqualityReport telescope_check(const SeedPair& seed, long long m, long long n);

/// Membership in one of the four base families: A_n = μ·F_{n+j} for all n,
/// equivalently (r, s) = μ·(F_j, F_{j+1}) with rational μ ≠ 0.
struct Member {
    Family family;  // one of T, B, C, L
    long long shift;
    Rational mu;
};

struct Classification {
    std::optional<Member> member;
    bool in_four_families() const { return member.has_value(); }
};

/// Classifies a seed. The invariant Q must be Q_F times the square of a
/// rational (Q_F: T→1, B→−4, C→32, L→−32); the member is then located by a
/// finite walk over shifts. Canonical choice: family order T, B, C, L, then
/// minimal |shift|, then positive μ.
Classification classify(const SeedPair& seed);

/// Witness that 32A_n² + c = h·L_{2n+m+2} for all n, with c = 2Q and h a
/// nonzero integer. Derived from the cascade conditions a_0 = −T_{m+4}·h,
/// a_1 = −T_{m+3}·h.
struct Certificate {
    long long m;
    BigInt h;
    BigInt c;
};

/// Searches m ∈ [−m_window, m_window] for an integer-h certificate and
/// verifies it exactly for n ∈ [1, n_check] before returning it.
std::optional<Certificate> certificate(const SeedPair& seed, long long m_window,
                                       long long n_check);

/// One sign branch of the closed-form solution of the certificate conditions:
/// h = 2s²(3t₁ − t₀ ± 1)/t₁² with r = s(t₀ ∓ 1)/t₁ (t₀ = T_{m+3}, t₁ = T_{m+4}).
struct HBranch {
    int h_sign;  // the ± in the h formula
    Rational r;
    bool r_integral;
    Rational h;
    std::optional<Certificate> cert;  // certificate search on the implied seed
    bool consistent;                  // cert found with matching m and h
};

struct HFormulaReport {
    long long m;  // index with (t0, t1) = (T_{m+3}, T_{m+4})
    HBranch plus;
    HBranch minus;
};

/// Audits the closed-form h for a concrete consecutive pair (t0, t1) of the T
/// family and a chosen s: for each sign, reconstructs r where it is integral
/// and confirms the certificate search reproduces the predicted (m, h).
HFormulaReport h_formula_check(const BigInt& t0, const BigInt& t1, const BigInt& s);

/// Generalized Pell equation x² − D·y² = N, D ≥ 2 nonsquare.
struct PellEquation {
    BigInt d;
    BigInt n;
};

struct PellSolution {
    BigInt x;
    BigInt y;
    bool operator==(const PellSolution&) const = default;
};

/// All solutions with 0 ≤ y ≤ y_max and x ≥ 0, by exact integer square-root
/// testing of N + D·y² over the full y range. Sorted by y.
std::vector<PellSolution> pell_brute(const PellEquation& eq, const BigInt& y_max);

/// The family-parameterized solutions of the four supported equations:
///   x² −  8y² =  1 → (L_n/2, T_n)      x² − 2y² = −1 → (C_n/2, B_n)
///   x² −  2y² =  8 → (E_n, C_n)        x² − 32y² =  4 → (L_n, T_n)
/// for n ≥ 0 while y ≤ y_max. Other (D, N) raise a domain error.
std::vector<PellSolution> family_solutions(const PellEquation& eq, const BigInt& y_max);

}  // namespace pellseq
