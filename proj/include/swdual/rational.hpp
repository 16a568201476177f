#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

#include "swdual/errors.hpp"

namespace swdual {

using BigInt = mpz_class;
using BigRat = mpq_class;

// Parses "p", "-p" or "p/q" (base 10) into a reduced rational.
inline BigRat parse_rational(const std::string& s) {
    BigRat x;
    if (x.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    if (sgn(x.get_den()) == 0)
        throw std::invalid_argument("zero denominator in rational literal: '" + s + "'");
    x.canonicalize();
    return x;
}

inline std::string rational_str(const BigRat& x) { return x.get_str(); }

// base^e for integer e (negative allowed when base != 0).
inline BigRat rational_pow(const BigRat& base, long e) {
    if (e == 0) return BigRat(1);
    if (sgn(base) == 0) {
        if (e < 0) throw DivisionByZero("0 raised to a negative power");
        return BigRat(0);
    }
    const unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    BigRat out;
    mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(base.get_mpq_t()), a);
    mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(base.get_mpq_t()), a);
    out.canonicalize();
    if (e < 0) return BigRat(1) / out;
    return out;
}

} // namespace swdual
