#pragma once

#include "pellseq/quadrat.hpp"
#include "pellseq/sequences.hpp"

#include <map>
#include <string>

namespace pellseq {

/// Canonical exponential polynomial over Q(√2): a finite sum
///   n ↦ Σ_k c_k · γ^{k·n}
/// stored as a map slope k → coefficient c_k with no zero coefficients.
/// Distinct slopes give multiplicatively independent bases, so two of these
/// represent the same function of n exactly when their maps are equal.
/// Every object built from family terms with affine integer indices has only
/// even slopes, which keeps the (−1)-factors from δ independent of n.
class ExpPoly {
public:
    ExpPoly() = default;

    static ExpPoly constant(const QuadRat& c) {
        ExpPoly p;
        p.add_term(0, c);
        return p;
    }

    void add_term(long long slope, const QuadRat& coeff);

    const std::map<long long, QuadRat>& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    ExpPoly operator-() const;
    ExpPoly operator+(const ExpPoly& o) const;
    ExpPoly operator-(const ExpPoly& o) const;
    ExpPoly operator*(const ExpPoly& o) const;  // slopes add, coefficients multiply
    ExpPoly scale(const QuadRat& c) const;
    ExpPoly pow(unsigned long long e) const;

    bool operator==(const ExpPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const ExpPoly& o) const { return !(*this == o); }

    /// Σ c_k γ^{k·n}, exact.
    QuadRat eval(long long n) const;

    std::string str() const;

private:
    std::map<long long, QuadRat> terms_;
};

/// Exact ExpPoly for n ↦ F(a·n + b), F ∈ {T, L, B, C, E}.
/// All powers are normalized to powers of γ via α = γ², β = γ⁻², δ = −γ⁻¹.
ExpPoly from_family(Family f, long long a, long long b);

}  // namespace pellseq
