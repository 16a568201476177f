#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "swdual/errors.hpp"
#include "swdual/ratfunc.hpp"

namespace swdual {

inline bool is_zero_scalar(const BigRat& x) { return sgn(x) == 0; }
inline bool is_zero_scalar(const RatFunc& x) { return x.is_zero(); }

// pivot preference: fewer terms first
inline std::size_t scalar_weight(const BigRat&) { return 1; }
inline std::size_t scalar_weight(const RatFunc& x) {
    return x.num().term_count() + x.den().term_count();
}

template <class F>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    F& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    const std::vector<F>& entries() const { return a_; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!is_zero_scalar(x)) return false;
        return true;
    }

    bool is_diagonal() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (i != j && !is_zero_scalar((*this)(i, j))) return false;
        return true;
    }

    bool is_scalar() const {
        if (rows_ == 0 || !is_diagonal()) return false;
        for (std::size_t i = 1; i < rows_; ++i)
            if (!((*this)(i, i) == (*this)(0, 0))) return false;
        return true;
    }

    bool operator==(const Matrix&) const = default;

    Matrix operator-() const {
        Matrix out = *this;
        for (auto& x : out.a_) x = -x;
        return out;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw DimensionMismatch("matrix sum shape mismatch");
        Matrix out = a;
        for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] += b.a_[i];
        return out;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw DimensionMismatch("matrix difference shape mismatch");
        Matrix out = a;
        for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] -= b.a_[i];
        return out;
    }

    Matrix& operator+=(const Matrix& b) { return *this = *this + b; }

    Matrix scaled(const F& c) const {
        Matrix out = *this;
        for (auto& x : out.a_) x = x * c;
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw DimensionMismatch("matrix product shape mismatch");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const F& x = a(i, k);
                if (is_zero_scalar(x)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const F& y = b(k, j);
                    if (is_zero_scalar(y)) continue;
                    out(i, j) += x * y;
                }
            }
        }
        return out;
    }

private:
    std::size_t rows_, cols_;
    std::vector<F> a_;
};

template <class F>
Matrix<F> commutator(const Matrix<F>& a, const Matrix<F>& b) {
    return a * b - b * a;
}

template <class F>
Matrix<F> kron(const Matrix<F>& a, const Matrix<F>& b) {
    Matrix<F> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const F& x = a(i, j);
            if (is_zero_scalar(x)) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    const F& y = b(k, l);
                    if (is_zero_scalar(y)) continue;
                    out(i * b.rows() + k, j * b.cols() + l) = x * y;
                }
        }
    return out;
}

template <class F>
std::vector<F> flatten(const Matrix<F>& m) {
    return m.entries();
}

namespace detail {

// scale a row so its entries lie in the base ring (integers, or Laurent
// polynomials with trivial denominator) and strip the common content
inline void normalize_rank_row(Matrix<BigRat>& m, std::size_t i) {
    BigInt l(1);
    for (std::size_t j = 0; j < m.cols(); ++j)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den().get_mpz_t());
    BigInt g(0);
    for (std::size_t j = 0; j < m.cols(); ++j) {
        m(i, j) *= BigRat(l);
        m(i, j).canonicalize();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m(i, j).get_num().get_mpz_t());
    }
    if (sgn(g) != 0 && g != 1)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            m(i, j) /= BigRat(g);
            m(i, j).canonicalize();
        }
}

inline void normalize_rank_row(Matrix<RatFunc>& m, std::size_t i) {
    LaurentPoly l = LaurentPoly::one();
    for (std::size_t j = 0; j < m.cols(); ++j) {
        const LaurentPoly& d = m(i, j).den();
        if (!d.is_one())
            l = laurent_divexact(l * d, laurent_gcd(l, d));
    }
    const RatFunc scale(l);
    LaurentPoly g;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (!l.is_one()) m(i, j) *= scale;
        if (!m(i, j).is_zero()) g = laurent_gcd(g, m(i, j).num());
    }
    if (!g.is_zero() && !g.is_one()) {
        const RatFunc inv_g = RatFunc(1) / RatFunc(g);
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= inv_g;
    }
}

} // namespace detail

// Rank over the fraction field by fraction-free (Bareiss) elimination:
// rows are first cleared to the base ring, pivots are chosen by fewest
// terms, and the delayed division keeps intermediates in the ring.
template <class F>
std::size_t rank(Matrix<F> m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    for (std::size_t i = 0; i < rows; ++i) detail::normalize_rank_row(m, i);
    std::vector<std::size_t> perm(rows);
    for (std::size_t i = 0; i < rows; ++i) perm[i] = i;
    std::size_t rk = 0;
    F prev = F(1);
    for (std::size_t col = 0; col < cols && rk < rows; ++col) {
        std::size_t best = rows;
        std::size_t best_w = 0;
        for (std::size_t r = rk; r < rows; ++r) {
            const F& x = m(perm[r], col);
            if (is_zero_scalar(x)) continue;
            const std::size_t w = scalar_weight(x);
            if (best == rows || w < best_w) {
                best = r;
                best_w = w;
            }
        }
        if (best == rows) continue;
        std::swap(perm[rk], perm[best]);
        const std::size_t p = perm[rk];
        for (std::size_t r = rk + 1; r < rows; ++r) {
            const std::size_t t = perm[r];
            const F& head = m(t, col);
            if (is_zero_scalar(head)) {
                for (std::size_t j = col + 1; j < cols; ++j) {
                    if (is_zero_scalar(m(t, j))) continue;
                    m(t, j) = m(t, j) * m(p, col) / prev;
                }
                continue;
            }
            for (std::size_t j = col + 1; j < cols; ++j)
                m(t, j) = (m(t, j) * m(p, col) - head * m(p, j)) / prev;
            m(t, col) = F(0);
        }
        prev = m(p, col);
        ++rk;
    }
    return rk;
}

// Entrywise evaluation at q = t; throws BadSpecialization when any
// denominator vanishes at t.
inline Matrix<BigRat> specialize_matrix(const Matrix<RatFunc>& m, const BigRat& t) {
    Matrix<BigRat> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const RatFunc& x = m(i, j);
            if (!x.is_zero()) out(i, j) = x.specialize(t);
        }
    return out;
}

} // namespace swdual
