#include "pellseq/sequences.hpp"

#include <array>
#include <stdexcept>

namespace pellseq {

std::string family_name(Family f) {
    switch (f) {
        case Family::T: return "T";
        case Family::L: return "L";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::E: return "E";
        case Family::NSW: return "NSW";
        case Family::R: return "R";
    }
    throw std::logic_error("family_name: bad enum");
}

std::optional<Family> family_from_name(const std::string& name) {
    if (name == "T") return Family::T;
    if (name == "L") return Family::L;
    if (name == "B") return Family::B;
    if (name == "C") return Family::C;
    if (name == "E") return Family::E;
    if (name == "NSW") return Family::NSW;
    if (name == "R") return Family::R;
    return std::nullopt;
}

RecurrenceSpec family_spec(Family f) {
    switch (f) {
        case Family::T: return {6, -1, BigInt(0), BigInt(1)};
        case Family::L: return {6, -1, BigInt(2), BigInt(6)};
        case Family::B: return {6, -1, BigInt(1), BigInt(5)};
        case Family::C: return {6, -1, BigInt(2), BigInt(14)};
        case Family::E: return {6, -1, BigInt(4), BigInt(20)};
        case Family::R: return {2, 1, BigInt(1), BigInt(1)};
        case Family::NSW:
            throw std::invalid_argument("NSW has no recurrence spec; it is C_n / 2");
    }
    throw std::logic_error("family_spec: bad enum");
}

BigInt term(const RecurrenceSpec& spec, long long n) {
    if (n == 0) return spec.seed0;
    if (n == 1) return spec.seed1;
    BigInt prev = spec.seed0, cur = spec.seed1;
    if (n > 1) {
        for (long long k = 2; k <= n; ++k) {
            BigInt next = spec.p * cur + spec.q * prev;
            prev = std::move(cur);
            cur = std::move(next);
        }
        return cur;
    }
    // backward: X_{k−2} = (X_k − p·X_{k−1}) / q, exact since q = ±1
    for (long long k = 0; k > n; --k) {
        BigInt back = cur - spec.p * prev;
        if (spec.q == -1) back = -back;
        cur = std::move(prev);
        prev = std::move(back);
    }
    return prev;
}

namespace {

// 2×2 integer matrix, row-major.
struct Mat2 {
    BigInt m00, m01, m10, m11;

    Mat2 operator*(const Mat2& o) const {
        return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
                m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
    }
};

Mat2 mat_pow(Mat2 base, unsigned long long e) {
    Mat2 acc{BigInt(1), BigInt(0), BigInt(0), BigInt(1)};
    while (e > 0) {
        if (e & 1ULL) acc = acc * base;
        base = base * base;
        e >>= 1ULL;
    }
    return acc;
}

}  // namespace

BigInt term_fast(const RecurrenceSpec& spec, long long n) {
    // [X_{k+1}; X_k] = M^k [X_1; X_0] with M = [[p, q], [1, 0]], det M = −q = ±1.
    Mat2 m{BigInt(spec.p), BigInt(spec.q), BigInt(1), BigInt(0)};
    unsigned long long e;
    if (n >= 0) {
        e = static_cast<unsigned long long>(n);
    } else {
        // M⁻¹ = adj(M)/det(M), integral because det = ±1.
        if (spec.q == -1)
            m = Mat2{BigInt(0), BigInt(1), BigInt(-1), BigInt(spec.p)};
        else
            m = Mat2{BigInt(0), BigInt(1), BigInt(1), BigInt(-spec.p)};
        e = 0ULL - static_cast<unsigned long long>(n);
    }
    Mat2 mp = mat_pow(std::move(m), e);
    return mp.m10 * spec.seed1 + mp.m11 * spec.seed0;
}

BigInt family_term(Family f, long long n) {
    if (f == Family::NSW) {
        BigInt c = term_fast(family_spec(Family::C), n);
        if (mpz_even_p(c.get_mpz_t()) == 0)
            throw std::logic_error("family_term: C_n expected even");
        BigInt half;
        mpz_divexact_ui(half.get_mpz_t(), c.get_mpz_t(), 2);
        return half;
    }
    return term_fast(family_spec(f), n);
}

ClosedFormCoeffs closed_form_coeffs(const BigInt& r, const BigInt& s) {
    // c1 = (s − rβ)/(α−β), c2 = (rα − s)/(α−β), with α−β = 4√2.
    QuadRat inv_4sqrt2 = QuadRat(Rational(0), Rational(4)).inverse();
    QuadRat rr{Rational(r), Rational(0)};
    QuadRat ss{Rational(s), Rational(0)};
    QuadRat c1 = (ss - rr * beta()) * inv_4sqrt2;
    QuadRat c2 = (rr * alpha() - ss) * inv_4sqrt2;
    return {c1, c2};
}

std::vector<BigInt> gf_prefix(const BigInt& r, const BigInt& s, long long count) {
    if (count < 0) throw std::invalid_argument("gf_prefix: count must be >= 0");
    // numerator r + (s−7r)x + (6r−s)x²; denominator (1−x)(1−6x+x²) = 1 −7x +7x² −x³
    const std::array<BigInt, 3> num{r, s - 7 * r, 6 * r - s};
    const std::array<long, 4> den{1, -7, 7, -1};
    std::vector<BigInt> c;
    c.reserve(static_cast<size_t>(count));
    for (long long k = 0; k < count; ++k) {
        BigInt acc = (k < 3) ? num[static_cast<size_t>(k)] : BigInt(0);
        for (long long i = 1; i <= 3 && i <= k; ++i)
            acc -= den[static_cast<size_t>(i)] * c[static_cast<size_t>(k - i)];
        c.push_back(std::move(acc));
    }
    return c;
}

RelationReport cross_relations_check(long long lo, long long hi) {
    for (long long n = lo; n <= hi; ++n) {
        BigInt tn = family_term(Family::T, n), tn1 = family_term(Family::T, n + 1);
        BigInt ln = family_term(Family::L, n), ln1 = family_term(Family::L, n + 1);
        BigInt bn = family_term(Family::B, n);
        BigInt cn = family_term(Family::C, n);
        BigInt en = family_term(Family::E, n);
        if (bn != tn1 - tn) return {RelationFailure{"B(n) = T(n+1) - T(n)", n}};
        if (2 * en != ln1 + ln) return {RelationFailure{"2E(n) = L(n+1) + L(n)", n}};
        if (en != 4 * bn) return {RelationFailure{"E(n) = 4B(n)", n}};
        if (cn != 2 * (tn1 + tn)) return {RelationFailure{"C(n) = 2(T(n+1) + T(n))", n}};
        if (2 * cn != ln1 - ln) return {RelationFailure{"2C(n) = L(n+1) - L(n)", n}};
        if (family_term(Family::NSW, n) != family_term(Family::R, 2 * n + 1))
            return {RelationFailure{"NSW(n) = R(2n+1)", n}};
    }
    return {};
}

}  // namespace pellseq
