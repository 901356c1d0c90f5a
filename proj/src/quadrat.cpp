#include "pellseq/quadrat.hpp"

namespace pellseq {

QuadRat QuadRat::inverse() const {
    Rational n = norm();
    if (n.is_zero()) throw std::domain_error("QuadRat: inverse of zero");
    QuadRat c = conj();
    Rational ninv = n.inverse();
    return {c.a * ninv, c.b * ninv};
}

QuadRat QuadRat::pow(long long e) const {
    if (e == 0) return QuadRat(1);
    QuadRat base = *this;
    unsigned long long k;
    if (e < 0) {
        if (is_zero()) throw std::domain_error("QuadRat: zero base with negative exponent");
        base = inverse();
        k = 0ULL - static_cast<unsigned long long>(e);
    } else {
        k = static_cast<unsigned long long>(e);
    }
    QuadRat acc(1);
    while (k > 0) {
        if (k & 1ULL) acc *= base;
        base *= base;
        k >>= 1ULL;
    }
    return acc;
}

std::string QuadRat::str() const {
    if (b.is_zero()) return a.str();
    std::string root;
    if (b == Rational(1)) {
        root = "√2";
    } else if (b == Rational(-1)) {
        root = "-√2";
    } else {
        root = b.str() + "√2";
    }
    if (a.is_zero()) return root;
    if (b.sign() > 0) return a.str() + "+" + root;
    return a.str() + root;  // negative b carries its own sign
}

const QuadRat& alpha() {
    static const QuadRat v{Rational(3), Rational(2)};
    return v;
}
const QuadRat& beta() {
    static const QuadRat v{Rational(3), Rational(-2)};
    return v;
}
const QuadRat& gamma() {
    static const QuadRat v{Rational(1), Rational(1)};
    return v;
}
const QuadRat& delta() {
    static const QuadRat v{Rational(1), Rational(-1)};
    return v;
}
const QuadRat& sqrt2() {
    static const QuadRat v{Rational(0), Rational(1)};
    return v;
}

const QuadInt& gamma_int() {
    static const QuadInt v{BigInt(1), BigInt(1)};
    return v;
}
const QuadInt& delta_int() {
    static const QuadInt v{BigInt(1), BigInt(-1)};
    return v;
}

}  // namespace pellseq
