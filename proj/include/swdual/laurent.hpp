#pragma once

#include <string>
#include <vector>

#include "swdual/rational.hpp"

namespace swdual {

// Laurent polynomial in q over Q. Terms are kept sorted by ascending
// exponent and no stored coefficient is zero; the zero polynomial has an
// empty term list.
class LaurentPoly {
public:
    struct Term {
        long exp;
        BigRat coeff;
        bool operator==(const Term&) const = default;
    };

    LaurentPoly() = default;

    static LaurentPoly zero() { return {}; }
    static LaurentPoly one() { return monomial(0, BigRat(1)); }
    static LaurentPoly variable() { return monomial(1, BigRat(1)); }
    static LaurentPoly constant(BigRat c) { return monomial(0, std::move(c)); }
    static LaurentPoly monomial(long exp, BigRat coeff);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    long low_exp() const;  // smallest exponent; throws on the zero polynomial
    long high_exp() const;
    BigRat coeff_at(long exp) const;
    const BigRat& leading_coeff() const;

    LaurentPoly shifted(long k) const;  // multiply by q^k
    LaurentPoly scaled(const BigRat& c) const;

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    bool operator==(const LaurentPoly&) const = default;

    // Exact evaluation at q = t. Negative exponents require t != 0.
    BigRat eval(const BigRat& t) const;

    // Terms rendered by descending exponent, e.g. "q - q^-1" or "1/2*q^2 + 3".
    std::string str() const;
    static LaurentPoly parse(const std::string& s);

private:
    std::vector<Term> terms_;
};

// Monic gcd of the ordinary parts of a and b (q-power units divided out),
// as an ordinary polynomial with nonzero constant term. gcd(0, 0) = 0.
// Computed by a fraction-free subresultant remainder sequence over Z.
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

// Exact quotient a / b in the Laurent ring; throws Error if b does not
// divide a, DivisionByZero if b = 0.
LaurentPoly laurent_divexact(const LaurentPoly& a, const LaurentPoly& b);

} // namespace swdual
