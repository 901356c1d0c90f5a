#include "pellseq/pell.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace pellseq {

namespace {

void require_valid(const SeedPair& seed) {
    if (seed.r == 0 && seed.s == 0)
        throw std::invalid_argument("seed (0, 0) is not a valid seed");
}

BigInt lterm(long long n) { return family_term(Family::L, n); }
BigInt tterm(long long n) { return family_term(Family::T, n); }

}  // namespace

BigInt invariant_q(const SeedPair& seed) {
    return seed.r * seed.r + seed.s * seed.s - 6 * seed.r * seed.s;
}

BigInt seed_term(const SeedPair& seed, long long n) {
    return term(RecurrenceSpec(6, -1, seed.r, seed.s), n);
}

EqualityReport fundamental_check(const SeedPair& seed, long long n) {
    BigInt an = seed_term(seed, n);
    BigInt lhs = 32 * an * an + 2 * invariant_q(seed);
    BigInt rhs = (seed.r * seed.r - seed.s * seed.s) * lterm(2 * n - 2) +
                 (6 * seed.s * seed.s - 2 * seed.r * seed.s) * lterm(2 * n - 1);
    return {lhs, rhs};
}

Cascade::Cascade(const SeedPair& seed)
    : spec_(6, -1, 2 * seed.r * seed.s - 6 * seed.s * seed.s,
            seed.r * seed.r - seed.s * seed.s) {}

BigInt Cascade::at(long long k) const { return term(spec_, k); }

EqualityReport telescope_check(const SeedPair& seed, long long m, long long n) {
    BigInt an = seed_term(seed, n);
    BigInt lhs = 32 * an * an + 2 * invariant_q(seed);
    Cascade a(seed);
    BigInt rhs = a.at(m + 3) * lterm(2 * n + m) - a.at(m + 2) * lterm(2 * n + m + 1);
    return {lhs, rhs};
}

namespace {

BigInt family_invariant(Family f) {
    switch (f) {
        case Family::T: return BigInt(1);
        case Family::B: return BigInt(-4);
        case Family::C: return BigInt(32);
        case Family::L: return BigInt(-32);
        default: throw std::logic_error("family_invariant: not a base family");
    }
}

int family_rank(Family f) {
    switch (f) {
        case Family::T: return 0;
        case Family::B: return 1;
        case Family::C: return 2;
        case Family::L: return 3;
        default: return 4;
    }
}

// Smallest window radius such that |F_j| and |F_{j+1}| both exceed `bound`
// outside [−radius, radius]. Family magnitudes grow geometrically in both
// directions, so this terminates quickly.
long long walk_radius(Family f, const BigInt& bound) {
    long long j = 2;
    while (abs(family_term(f, j)) <= bound || abs(family_term(f, j + 1)) <= bound ||
           abs(family_term(f, -j)) <= bound || abs(family_term(f, -j + 1)) <= bound)
        ++j;
    return j;
}

}  // namespace

Classification classify(const SeedPair& seed) {
    require_valid(seed);
    const BigInt& r = seed.r;
    const BigInt& s = seed.s;
    // Seeds on a coordinate axis are T-multiples: (0, s) = s·(T_0, T_1) and
    // (r, 0) = −r·(T_{−1}, T_0). This also keeps F_j = 0 out of the walk below.
    if (r == 0) return {Member{Family::T, 0, Rational(s)}};
    if (s == 0) return {Member{Family::T, -1, Rational(BigInt(-r))}};

    BigInt q = invariant_q(seed);
    std::vector<Member> candidates;
    for (Family f : {Family::T, Family::B, Family::C, Family::L}) {
        Rational ratio(q, family_invariant(f));  // must equal μ²
        if (ratio.sign() <= 0) continue;
        std::optional<Rational> mu_abs = exact_sqrt(ratio);
        if (!mu_abs) continue;
        // |F_j| = |r| / |μ|, so the walk is bounded.
        BigInt mx = std::max(abs(r), abs(s));
        BigInt bound = (mx * mu_abs->den()) / mu_abs->num() + 2;
        long long radius = walk_radius(f, bound);
        for (long long j = -radius; j <= radius; ++j) {
            BigInt fj = family_term(f, j), fj1 = family_term(f, j + 1);
            if (r * fj1 != s * fj) continue;
            if (fj == 0) continue;  // excluded by the axis short-circuits above
            Rational mu = Rational(r) / Rational(fj);
            if (mu.is_zero()) continue;
            if (Rational(r) != mu * Rational(fj) || Rational(s) != mu * Rational(fj1)) continue;
            candidates.push_back(Member{f, j, mu});
        }
    }
    if (candidates.empty()) return {};
    std::sort(candidates.begin(), candidates.end(), [](const Member& a, const Member& b) {
        auto key = [](const Member& m) {
            return std::tuple<int, long long, int, long long>(
                family_rank(m.family), std::llabs(m.shift), m.mu.sign() < 0 ? 1 : 0, m.shift);
        };
        return key(a) < key(b);
    });
    return {candidates.front()};
}

std::optional<Certificate> certificate(const SeedPair& seed, long long m_window,
                                       long long n_check) {
    require_valid(seed);
    if (m_window < 0) throw std::invalid_argument("certificate: m_window must be >= 0");
    Cascade a(seed);
    BigInt a0 = a.at(0), a1 = a.at(1);
    BigInt c = 2 * invariant_q(seed);
    for (long long m = -m_window; m <= m_window; ++m) {
        BigInt t1 = tterm(m + 4), t0 = tterm(m + 3);
        BigInt h;
        if (t1 == 0) {
            // m = −4: a_0 must vanish; h comes from a_1 = −T_{m+3}·h
            if (a0 != 0) continue;
            if (!mpz_divisible_p(a1.get_mpz_t(), t0.get_mpz_t())) continue;
            h = -(a1 / t0);
        } else {
            if (a0 * t0 != a1 * t1) continue;  // (a_0, a_1) ∝ (t1, t0)
            if (!mpz_divisible_p(a0.get_mpz_t(), t1.get_mpz_t())) continue;
            h = -(a0 / t1);
            if (-t0 * h != a1) continue;
        }
        if (h == 0) continue;
        for (long long n = 1; n <= n_check; ++n) {
            BigInt an = seed_term(seed, n);
            if (32 * an * an + c != h * lterm(2 * n + m + 2))
                throw std::logic_error("certificate: candidate (m, h) failed verification");
        }
        return Certificate{m, h, c};
    }
    return std::nullopt;
}

namespace {

// Locates m with (T_{m+3}, T_{m+4}) = (t0, t1), if the pair is consecutive in T.
std::optional<long long> locate_t_pair(const BigInt& t0, const BigInt& t1) {
    BigInt bound = std::max(abs(t0), abs(t1));
    long long radius = walk_radius(Family::T, bound);
    for (long long k = -radius; k <= radius; ++k)
        if (tterm(k) == t0 && tterm(k + 1) == t1) return k - 3;
    return std::nullopt;
}

HBranch h_branch(int h_sign, const BigInt& t0, const BigInt& t1, const BigInt& s,
                 long long m) {
    HBranch br;
    br.h_sign = h_sign;
    br.h = Rational(2 * s * s * (3 * t1 - t0 + h_sign), t1 * t1);
    br.r = Rational(s * (t0 - h_sign), t1);  // plus sign in h pairs with (t0 − 1)
    br.r_integral = br.r.is_integer();
    br.consistent = false;
    if (!br.r_integral) return br;
    BigInt r = br.r.num();
    if (r == 0 && s == 0) return br;
    long long window = std::max<long long>(10, std::llabs(m) + 4);
    br.cert = certificate(SeedPair{r, s}, window, 10);
    br.consistent = br.cert.has_value() && br.cert->m == m && Rational(br.cert->h) == br.h;
    return br;
}

}  // namespace

HFormulaReport h_formula_check(const BigInt& t0, const BigInt& t1, const BigInt& s) {
    if (t1 == 0) throw std::invalid_argument("h_formula_check: t1 must be nonzero");
    std::optional<long long> m = locate_t_pair(t0, t1);
    if (!m)
        throw std::invalid_argument(
            "h_formula_check: (t0, t1) is not a consecutive pair of the T family");
    return {*m, h_branch(+1, t0, t1, s, *m), h_branch(-1, t0, t1, s, *m)};
}

std::vector<PellSolution> pell_brute(const PellEquation& eq, const BigInt& y_max) {
    if (eq.d < 2 || is_perfect_square(eq.d))
        throw std::invalid_argument("pell_brute: D must be >= 2 and nonsquare");
    if (y_max < 0) throw std::invalid_argument("pell_brute: y_max must be >= 0");
    std::vector<PellSolution> out;
    for (BigInt y = 0; y <= y_max; ++y) {
        BigInt t = eq.n + eq.d * y * y;
        if (t < 0 || !is_perfect_square(t)) continue;
        out.push_back({int_sqrt(t), y});
    }
    return out;
}

std::vector<PellSolution> family_solutions(const PellEquation& eq, const BigInt& y_max) {
    // (x_n, y_n) per supported equation; y grows strictly, so cut at y_max.
    Family xf, yf;
    bool half_x = false;
    if (eq.d == 8 && eq.n == 1) {
        xf = Family::L; yf = Family::T; half_x = true;
    } else if (eq.d == 2 && eq.n == -1) {
        xf = Family::C; yf = Family::B; half_x = true;
    } else if (eq.d == 2 && eq.n == 8) {
        xf = Family::E; yf = Family::C;
    } else if (eq.d == 32 && eq.n == 4) {
        xf = Family::L; yf = Family::T;
    } else {
        throw std::domain_error(
            "family_solutions: supported equations are x^2-8y^2=1, x^2-2y^2=-1, "
            "x^2-2y^2=8, x^2-32y^2=4");
    }
    std::vector<PellSolution> out;
    for (long long n = 0;; ++n) {
        BigInt y = family_term(yf, n);
        if (y > y_max) break;
        BigInt x = family_term(xf, n);
        if (half_x) {
            if (mpz_even_p(x.get_mpz_t()) == 0)
                throw std::logic_error("family_solutions: expected even term");
            x /= 2;
        }
        out.push_back({std::move(x), std::move(y)});
    }
    return out;
}

}  // namespace pellseq
