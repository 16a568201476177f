#pragma once

#include <string>

#include "swdual/laurent.hpp"

namespace swdual {

// Element of Q(q) in canonical reduced form: the denominator is an
// ordinary monic polynomial with nonzero constant term, every q-power
// unit lives in the numerator, and the ordinary part of the numerator is
// coprime to the denominator. Zero is 0/1. Equality is structural.
class RatFunc {
public:
    RatFunc() : den_(LaurentPoly::one()) {}
    RatFunc(int v) : RatFunc(BigRat(v)) {}
    RatFunc(BigRat c) : num_(LaurentPoly::constant(std::move(c))), den_(LaurentPoly::one()) {}
    RatFunc(LaurentPoly p) : num_(std::move(p)), den_(LaurentPoly::one()) {}

    // num / den, canonicalized; throws DivisionByZero when den = 0.
    static RatFunc quotient(LaurentPoly num, LaurentPoly den);
    static RatFunc variable() { return RatFunc(LaurentPoly::variable()); }
    static RatFunc q_power(long k) { return RatFunc(LaurentPoly::monomial(k, BigRat(1))); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);  // throws DivisionByZero
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    bool operator==(const RatFunc&) const = default;

    RatFunc inverse() const;

    // Exact evaluation at q = t; throws BadSpecialization on t = 0 or a
    // vanishing denominator.
    BigRat specialize(const BigRat& t) const;

    // "num" when den = 1, otherwise "(num)/(den)".
    std::string str() const;
    static RatFunc parse(const std::string& s);

private:
    LaurentPoly num_, den_;

    struct raw_tag {};
    RatFunc(LaurentPoly n, LaurentPoly d, raw_tag) : num_(std::move(n)), den_(std::move(d)) {}
    static RatFunc make_canonical(LaurentPoly n, LaurentPoly d);
};

} // namespace swdual
