#include "swdual/ratfunc.hpp"

#include "swdual/errors.hpp"

namespace swdual {

RatFunc RatFunc::make_canonical(LaurentPoly n, LaurentPoly d) {
    if (d.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (n.is_zero()) return RatFunc();
    // pull the denominator's q-power unit into the numerator
    const long shift = d.low_exp();
    if (shift != 0) {
        d = d.shifted(-shift);
        n = n.shifted(-shift);
    }
    // split the numerator as unit * ordinary part and reduce by the gcd
    const long unit = n.low_exp();
    LaurentPoly n_ord = n.shifted(-unit);
    if (!d.is_constant()) {
        const LaurentPoly g = laurent_gcd(n_ord, d);
        if (!g.is_one()) {
            n_ord = laurent_divexact(n_ord, g);
            d = laurent_divexact(d, g);
        }
    }
    const BigRat& lead = d.leading_coeff();
    if (lead != 1) {
        const BigRat inv = BigRat(1) / lead;
        n_ord = n_ord.scaled(inv);
        d = d.scaled(inv);
    }
    return RatFunc(n_ord.shifted(unit), std::move(d), raw_tag{});
}

RatFunc RatFunc::quotient(LaurentPoly num, LaurentPoly den) {
    return make_canonical(std::move(num), std::move(den));
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, raw_tag{}); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_.is_one() && b.den_.is_one())
        return RatFunc(a.num_ + b.num_);
    if (a.den_ == b.den_)
        return RatFunc::make_canonical(a.num_ + b.num_, a.den_);
    return RatFunc::make_canonical(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    if (a.den_.is_one() && b.den_.is_one())
        return RatFunc(a.num_ * b.num_);
    return RatFunc::make_canonical(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DivisionByZero("division by the zero rational function");
    return RatFunc::make_canonical(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return make_canonical(den_, num_);
}

BigRat RatFunc::specialize(const BigRat& t) const {
    if (sgn(t) == 0) throw BadSpecialization("specialization requires a nonzero point");
    const BigRat dv = den_.eval(t);
    if (sgn(dv) == 0) throw BadSpecialization("denominator vanishes at the given point");
    return num_.eval(t) / dv;
}

std::string RatFunc::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFunc RatFunc::parse(const std::string& s) {
    // fraction form "(num)/(den)"; anything else is a plain polynomial
    std::size_t start = 0, end = s.size();
    while (start < end && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
    while (end > start && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
    if (start < end && s[start] == '(') {
        int depth = 0;
        for (std::size_t i = start; i < end; ++i) {
            if (s[i] == '(') ++depth;
            else if (s[i] == ')') {
                --depth;
                if (depth == 0) {
                    std::size_t j = i + 1;
                    while (j < end && std::isspace(static_cast<unsigned char>(s[j]))) ++j;
                    if (j < end && s[j] == '/') {
                        ++j;
                        while (j < end && std::isspace(static_cast<unsigned char>(s[j]))) ++j;
                        if (j >= end || s[j] != '(' || s[end - 1] != ')')
                            throw std::invalid_argument("bad rational function literal: '" + s + "'");
                        LaurentPoly num = LaurentPoly::parse(s.substr(start + 1, i - start - 1));
                        LaurentPoly den = LaurentPoly::parse(s.substr(j + 1, end - j - 2));
                        return quotient(std::move(num), std::move(den));
                    }
                    break;
                }
            }
        }
    }
    return RatFunc(LaurentPoly::parse(s.substr(start, end - start)));
}

} // namespace swdual
