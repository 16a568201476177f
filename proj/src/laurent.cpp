#include "swdual/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "swdual/errors.hpp"

namespace swdual {

LaurentPoly LaurentPoly::monomial(long exp, BigRat coeff) {
    LaurentPoly p;
    if (sgn(coeff) != 0) p.terms_.push_back({exp, std::move(coeff)});
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].exp == 0 && terms_[0].coeff == 1;
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == 0);
}

long LaurentPoly::low_exp() const {
    if (terms_.empty()) throw Error("zero polynomial has no degree");
    return terms_.front().exp;
}

long LaurentPoly::high_exp() const {
    if (terms_.empty()) throw Error("zero polynomial has no degree");
    return terms_.back().exp;
}

BigRat LaurentPoly::coeff_at(long exp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const Term& t, long e) { return t.exp < e; });
    if (it != terms_.end() && it->exp == exp) return it->coeff;
    return BigRat(0);
}

const BigRat& LaurentPoly::leading_coeff() const {
    if (terms_.empty()) throw Error("zero polynomial has no leading coefficient");
    return terms_.back().coeff;
}

LaurentPoly LaurentPoly::shifted(long k) const {
    LaurentPoly out = *this;
    for (auto& t : out.terms_) t.exp += k;
    return out;
}

LaurentPoly LaurentPoly::scaled(const BigRat& c) const {
    if (sgn(c) == 0) return {};
    LaurentPoly out = *this;
    for (auto& t : out.terms_) t.coeff *= c;
    return out;
}

LaurentPoly LaurentPoly::operator-() const { return scaled(BigRat(-1)); }

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
        if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->exp < ib->exp)) {
            out.terms_.push_back(*ia++);
        } else if (ia == a.terms_.end() || ib->exp < ia->exp) {
            out.terms_.push_back(*ib++);
        } else {
            BigRat c = ia->coeff + ib->coeff;
            if (sgn(c) != 0) out.terms_.push_back({ia->exp, std::move(c)});
            ++ia;
            ++ib;
        }
    }
    return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const long lo = a.low_exp() + b.low_exp();
    const long hi = a.high_exp() + b.high_exp();
    std::vector<BigRat> acc(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_)
            acc[static_cast<std::size_t>(ta.exp + tb.exp - lo)] += ta.coeff * tb.coeff;
    LaurentPoly out;
    for (std::size_t i = 0; i < acc.size(); ++i)
        if (sgn(acc[i]) != 0) out.terms_.push_back({lo + static_cast<long>(i), std::move(acc[i])});
    return out;
}

BigRat LaurentPoly::eval(const BigRat& t) const {
    if (terms_.empty()) return BigRat(0);
    if (sgn(t) == 0) {
        if (low_exp() < 0) throw BadSpecialization("negative q-power evaluated at 0");
        return coeff_at(0);
    }
    BigRat out(0);
    long cur_exp = terms_.front().exp;
    BigRat cur = rational_pow(t, cur_exp);
    for (const auto& term : terms_) {
        while (cur_exp < term.exp) {
            cur *= t;
            ++cur_exp;
        }
        out += term.coeff * cur;
    }
    return out;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const bool neg = sgn(it->coeff) < 0;
        const BigRat mag = neg ? BigRat(-it->coeff) : it->coeff;
        out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        if (it->exp == 0) {
            out += mag.get_str();
        } else {
            if (mag != 1) out += mag.get_str() + "*";
            out += it->exp == 1 ? "q" : "q^" + std::to_string(it->exp);
        }
    }
    return out;
}

namespace {

void skip_ws(const std::string& s, std::size_t& pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

// number := digits ['/' digits]
BigRat read_number(const std::string& s, std::size_t& pos) {
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("expected number in '" + s + "'");
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        const std::size_t dstart = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == dstart) throw std::invalid_argument("expected denominator in '" + s + "'");
    }
    return parse_rational(s.substr(start, pos - start));
}

long read_exponent(const std::string& s, std::size_t& pos) {
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
        neg = s[pos] == '-';
        ++pos;
    }
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("expected exponent in '" + s + "'");
    long e = std::stol(s.substr(start, pos - start));
    return neg ? -e : e;
}

} // namespace

LaurentPoly LaurentPoly::parse(const std::string& s) {
    std::map<long, BigRat> acc;
    std::size_t pos = 0;
    skip_ws(s, pos);
    if (pos == s.size()) throw std::invalid_argument("empty polynomial literal");
    bool first = true;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
            skip_ws(s, pos);
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' in '" + s + "'");
        }
        first = false;
        BigRat coeff(1);
        bool have_coeff = false;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            coeff = read_number(s, pos);
            have_coeff = true;
            skip_ws(s, pos);
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                skip_ws(s, pos);
            }
        }
        long exp = 0;
        if (pos < s.size() && s[pos] == 'q') {
            ++pos;
            exp = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                exp = read_exponent(s, pos);
            }
        } else if (!have_coeff) {
            throw std::invalid_argument("expected term in '" + s + "'");
        }
        auto [it, inserted] = acc.try_emplace(exp, sign * coeff);
        if (!inserted) it->second += sign * coeff;
        skip_ws(s, pos);
    }
    LaurentPoly out;
    for (auto& [e, c] : acc)
        if (sgn(c) != 0) out.terms_.push_back({e, std::move(c)});
    return out;
}

// ---------------------------------------------------------------------------
// gcd via a primitive subresultant remainder sequence over Z. Exact, with
// bounded intermediate coefficient growth compared to naive rational Euclid.
// ---------------------------------------------------------------------------

namespace {

// dense ordinary polynomial over Z, coefficient of x^i at index i
using ZPoly = std::vector<BigInt>;

void trim(ZPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

long zdeg(const ZPoly& p) { return static_cast<long>(p.size()) - 1; }

BigInt content(const ZPoly& p) {
    BigInt g(0);
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void make_primitive(ZPoly& p) {
    if (p.empty()) return;
    BigInt g = content(p);
    if (sgn(p.back()) < 0) g = -g;
    if (g != 1)
        for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// primitive integer form of the ordinary part of p (p nonzero)
ZPoly to_primitive_z(const LaurentPoly& p) {
    const long lo = p.low_exp();
    BigInt l(1);
    for (const auto& t : p.terms())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den().get_mpz_t());
    ZPoly out(static_cast<std::size_t>(p.high_exp() - lo + 1));
    for (const auto& t : p.terms()) {
        BigRat scaled = t.coeff * l;
        out[static_cast<std::size_t>(t.exp - lo)] = scaled.get_num();
    }
    make_primitive(out);
    return out;
}

// lc(B)^(deg A - deg B + 1) * A mod B
ZPoly pseudo_rem(ZPoly R, const ZPoly& B) {
    const long d = zdeg(B);
    const BigInt& l = B.back();
    long e = zdeg(R) - d + 1;
    while (!R.empty() && zdeg(R) >= d) {
        const long dr = zdeg(R);
        const BigInt s = R.back();
        ZPoly next(static_cast<std::size_t>(dr));
        for (long i = 0; i < dr; ++i) {
            BigInt v = R[static_cast<std::size_t>(i)] * l;
            if (i >= dr - d) v -= B[static_cast<std::size_t>(i - (dr - d))] * s;
            next[static_cast<std::size_t>(i)] = std::move(v);
        }
        trim(next);
        R = std::move(next);
        --e;
    }
    if (e > 0) {
        BigInt f;
        mpz_pow_ui(f.get_mpz_t(), l.get_mpz_t(), static_cast<unsigned long>(e));
        for (auto& c : R) c *= f;
    }
    return R;
}

ZPoly subresultant_gcd(ZPoly A, ZPoly B) {
    if (zdeg(A) < zdeg(B)) std::swap(A, B);
    if (B.empty()) {
        make_primitive(A);
        return A;
    }
    if (zdeg(B) == 0) return {BigInt(1)};
    BigInt g(1), h(1);
    while (true) {
        const long delta = zdeg(A) - zdeg(B);
        ZPoly R = pseudo_rem(A, B);
        if (R.empty()) break;
        if (zdeg(R) == 0) return {BigInt(1)};
        A = std::move(B);
        BigInt hp;
        mpz_pow_ui(hp.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
        const BigInt divisor = g * hp;
        for (auto& c : R) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
        B = std::move(R);
        g = A.back();
        if (delta > 0) {
            BigInt gp;
            mpz_pow_ui(gp.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
            if (delta == 1) {
                h = gp;
            } else {
                BigInt hq;
                mpz_pow_ui(hq.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
                mpz_divexact(h.get_mpz_t(), gp.get_mpz_t(), hq.get_mpz_t());
            }
        }
    }
    make_primitive(B);
    return B;
}

LaurentPoly monic_ordinary(const LaurentPoly& p) {
    LaurentPoly out = p.shifted(-p.low_exp());
    return out.scaled(BigRat(1) / out.leading_coeff());
}

} // namespace

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) return {};
    if (a.is_zero()) return monic_ordinary(b);
    if (b.is_zero()) return monic_ordinary(a);
    ZPoly g = subresultant_gcd(to_primitive_z(a), to_primitive_z(b));
    LaurentPoly out;
    const BigInt& lead = g.back();
    for (std::size_t i = 0; i < g.size(); ++i)
        if (sgn(g[i]) != 0)
            out += LaurentPoly::monomial(static_cast<long>(i), BigRat(g[i]) / BigRat(lead));
    return out;
}

LaurentPoly laurent_divexact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.is_zero()) return {};
    const long unit = a.low_exp() - b.low_exp();
    const long da = a.high_exp() - a.low_exp();
    const long db = b.high_exp() - b.low_exp();
    if (da < db) throw Error("inexact polynomial division");
    std::vector<BigRat> A(static_cast<std::size_t>(da + 1)), B(static_cast<std::size_t>(db + 1));
    for (const auto& t : a.terms()) A[static_cast<std::size_t>(t.exp - a.low_exp())] = t.coeff;
    for (const auto& t : b.terms()) B[static_cast<std::size_t>(t.exp - b.low_exp())] = t.coeff;
    std::vector<BigRat> Q(static_cast<std::size_t>(da - db + 1));
    for (long k = da - db; k >= 0; --k) {
        BigRat c = A[static_cast<std::size_t>(k + db)] / B[static_cast<std::size_t>(db)];
        Q[static_cast<std::size_t>(k)] = c;
        if (sgn(c) != 0)
            for (long j = 0; j <= db; ++j) A[static_cast<std::size_t>(k + j)] -= c * B[static_cast<std::size_t>(j)];
    }
    for (const auto& r : A)
        if (sgn(r) != 0) throw Error("inexact polynomial division");
    LaurentPoly out;
    for (std::size_t i = 0; i < Q.size(); ++i)
        if (sgn(Q[i]) != 0) out += LaurentPoly::monomial(static_cast<long>(i) + unit, Q[i]);
    return out;
}

} // namespace swdual
