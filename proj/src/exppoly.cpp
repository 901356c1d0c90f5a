#include "pellseq/exppoly.hpp"

#include <stdexcept>

namespace pellseq {

void ExpPoly::add_term(long long slope, const QuadRat& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(slope);
    if (it == terms_.end()) {
        terms_.emplace(slope, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

ExpPoly ExpPoly::operator-() const {
    ExpPoly out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
}

ExpPoly ExpPoly::operator+(const ExpPoly& o) const {
    ExpPoly out = *this;
    for (const auto& [k, c] : o.terms_) out.add_term(k, c);
    return out;
}

ExpPoly ExpPoly::operator-(const ExpPoly& o) const {
    ExpPoly out = *this;
    for (const auto& [k, c] : o.terms_) out.add_term(k, -c);
    return out;
}

ExpPoly ExpPoly::operator*(const ExpPoly& o) const {
    ExpPoly out;
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_) out.add_term(k1 + k2, c1 * c2);
    return out;
}

ExpPoly ExpPoly::scale(const QuadRat& c) const {
    ExpPoly out;
    if (c.is_zero()) return out;
    for (const auto& [k, coeff] : terms_) out.terms_.emplace(k, coeff * c);
    return out;
}

ExpPoly ExpPoly::pow(unsigned long long e) const {
    ExpPoly acc = constant(QuadRat(1));
    ExpPoly base = *this;
    while (e > 0) {
        if (e & 1ULL) acc = acc * base;
        base = base * base;
        e >>= 1ULL;
    }
    return acc;
}

QuadRat ExpPoly::eval(long long n) const {
    QuadRat sum(0);
    for (const auto& [k, c] : terms_) sum += c * gamma().pow(k * n);
    return sum;
}

std::string ExpPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.str() + ")·γ^(" + std::to_string(k) + "n)";
    }
    return out;
}

ExpPoly from_family(Family f, long long a, long long b) {
    // Closed forms in γ, with m = a·n + b:
    //   T_m = (γ^{2m} − γ^{−2m})/(4√2)       L_m = γ^{2m} + γ^{−2m}
    //   B_m = (γ^{2m+1} + γ^{−2m−1})/(2√2)   C_m = γ^{2m+1} − γ^{−2m−1}
    //   E_m = √2 (γ^{2m+1} + γ^{−2m−1})
    // The index offset b and the half-step folds into the coefficients, leaving
    // slopes ±2a. When a = 0 the two slopes coincide and the terms accumulate.
    QuadRat inv_4sqrt2 = QuadRat(Rational(0), Rational(4)).inverse();
    QuadRat inv_2sqrt2 = QuadRat(Rational(0), Rational(2)).inverse();
    QuadRat hi, lo;
    switch (f) {
        case Family::T:
            hi = gamma().pow(2 * b) * inv_4sqrt2;
            lo = -(gamma().pow(-2 * b) * inv_4sqrt2);
            break;
        case Family::L:
            hi = gamma().pow(2 * b);
            lo = gamma().pow(-2 * b);
            break;
        case Family::B:
            hi = gamma().pow(2 * b + 1) * inv_2sqrt2;
            lo = gamma().pow(-2 * b - 1) * inv_2sqrt2;
            break;
        case Family::C:
            hi = gamma().pow(2 * b + 1);
            lo = -gamma().pow(-2 * b - 1);
            break;
        case Family::E:
            hi = sqrt2() * gamma().pow(2 * b + 1);
            lo = sqrt2() * gamma().pow(-2 * b - 1);
            break;
        default:
            throw std::invalid_argument("from_family: only T, L, B, C, E have exponential forms");
    }
    ExpPoly p;
    p.add_term(2 * a, hi);
    p.add_term(-2 * a, lo);
    return p;
}

}  // namespace pellseq
