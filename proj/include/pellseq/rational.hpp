#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace pellseq {

using BigInt = mpz_class;

/// Exact rational number. Always reduced, denominator > 0, zero is 0/1.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}                      // NOLINT: implicit by design
    Rational(const BigInt& n) : q_(n) {}             // NOLINT
    Rational(const BigInt& num, const BigInt& den) : q_(num, den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        q_.canonicalize();
    }
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(q_ / o.q_));
    }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

    bool operator==(const Rational& o) const { return q_ == o.q_; }
    bool operator!=(const Rational& o) const { return q_ != o.q_; }
    bool operator<(const Rational& o) const { return q_ < o.q_; }
    bool operator<=(const Rational& o) const { return q_ <= o.q_; }
    bool operator>(const Rational& o) const { return q_ > o.q_; }
    bool operator>=(const Rational& o) const { return q_ >= o.q_; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(den(), num());
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    std::string str() const {
        return is_integer() ? q_.get_num().get_str() : q_.get_str();
    }

private:
    // Internal: assumes canonical input (results of mpq arithmetic on canonical operands).
    explicit Rational(const mpq_class& q) : q_(q) {}

    mpq_class q_;
};

inline std::string to_string(const BigInt& z) { return z.get_str(); }

inline bool is_perfect_square(const BigInt& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

/// Floor of the square root; n must be >= 0.
inline BigInt int_sqrt(const BigInt& n) {
    if (n < 0) throw std::domain_error("int_sqrt: negative argument");
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

/// Exact rational square root, if one exists.
inline std::optional<Rational> exact_sqrt(const Rational& q) {
    if (q.sign() < 0) return std::nullopt;
    BigInt n = q.num(), d = q.den();
    if (!is_perfect_square(n) || !is_perfect_square(d)) return std::nullopt;
    return Rational(int_sqrt(n), int_sqrt(d));
}

}  // namespace pellseq
