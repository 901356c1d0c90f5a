#pragma once

#include "pellseq/rational.hpp"

#include <string>

namespace pellseq {

/// Element of the quadratic field Q(√2): value a + b·√2 with exact rational
/// coordinates. The representation is unique because √2 is irrational, so
/// equality is coordinate comparison.
struct QuadRat {
    Rational a;  // rational part
    Rational b;  // coefficient of √2

    QuadRat() = default;
    QuadRat(Rational ra, Rational rb) : a(std::move(ra)), b(std::move(rb)) {}
    QuadRat(long n) : a(n), b(0) {}          // NOLINT: implicit by design
    QuadRat(const Rational& r) : a(r), b(0) {}  // NOLINT

    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    bool is_rational() const { return b.is_zero(); }

    QuadRat operator-() const { return {-a, -b}; }
    QuadRat operator+(const QuadRat& o) const { return {a + o.a, b + o.b}; }
    QuadRat operator-(const QuadRat& o) const { return {a - o.a, b - o.b}; }
    QuadRat operator*(const QuadRat& o) const {
        // (a1 + b1√2)(a2 + b2√2) = (a1a2 + 2 b1b2) + (a1b2 + a2b1)√2
        return {a * o.a + Rational(2) * (b * o.b), a * o.b + o.a * b};
    }
    QuadRat& operator+=(const QuadRat& o) { a += o.a; b += o.b; return *this; }
    QuadRat& operator*=(const QuadRat& o) { *this = *this * o; return *this; }

    bool operator==(const QuadRat& o) const { return a == o.a && b == o.b; }
    bool operator!=(const QuadRat& o) const { return !(*this == o); }

    QuadRat conj() const { return {a, -b}; }
    Rational norm() const { return a * a - Rational(2) * (b * b); }

    /// Exact field inverse: conj(x)/norm(x). Throws on zero.
    QuadRat inverse() const;

    /// x^e by binary exponentiation; negative e via the exact inverse.
    QuadRat pow(long long e) const;

    QuadRat operator/(const QuadRat& o) const { return *this * o.inverse(); }

    std::string str() const;
};

/// Element of the ring of integers Z[√2]: a + b·√2 with integer coordinates.
/// Closed under addition and multiplication; units have norm ±1.
struct QuadInt {
    BigInt a;
    BigInt b;

    QuadInt() : a(0), b(0) {}
    QuadInt(BigInt ia, BigInt ib) : a(std::move(ia)), b(std::move(ib)) {}
    QuadInt(long n) : a(n), b(0) {}  // NOLINT

    QuadInt operator-() const { return {-a, -b}; }
    QuadInt operator+(const QuadInt& o) const { return {a + o.a, b + o.b}; }
    QuadInt operator-(const QuadInt& o) const { return {a - o.a, b - o.b}; }
    QuadInt operator*(const QuadInt& o) const {
        return {a * o.a + 2 * b * o.b, a * o.b + o.a * b};
    }
    bool operator==(const QuadInt& o) const { return a == o.a && b == o.b; }

    QuadInt conj() const { return {a, -b}; }
    BigInt norm() const { return a * a - 2 * b * b; }
    bool is_unit() const { BigInt n = norm(); return n == 1 || n == -1; }

    QuadRat to_quadrat() const { return {Rational(a), Rational(b)}; }
};

// The characteristic constants of x² − 6x + 1 and their square roots in Z[√2]:
// α = 3 + 2√2, β = 3 − 2√2 (αβ = 1, α + β = 6, α − β = 4√2),
// γ = 1 + √2, δ = 1 − √2 (γ² = α, δ² = β, γδ = −1).
const QuadRat& alpha();
const QuadRat& beta();
const QuadRat& gamma();
const QuadRat& delta();
const QuadRat& sqrt2();

const QuadInt& gamma_int();
const QuadInt& delta_int();

}  // namespace pellseq
