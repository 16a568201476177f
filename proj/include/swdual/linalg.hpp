#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "swdual/matrix.hpp"

namespace swdual {

template <class F>
struct SpanBasis {
    std::size_t dim = 0;
    std::vector<Matrix<F>> basis;  // linearly independent over the scalar field
};

// Incremental reduced row echelon form over the scalar field; used to
// extract linearly independent spanning sets.
template <class F>
class SpanEchelon {
public:
    explicit SpanEchelon(std::size_t width) : width_(width) {}

    std::size_t dim() const { return rows_.size(); }

    // Reduces v against the current rows; inserts and returns true when v
    // enlarges the span.
    bool insert(std::vector<F> v) {
        if (!reduce(v)) return false;
        const std::size_t p = leading_index(v);
        const F inv = F(1) / v[p];
        for (auto& x : v)
            if (!is_zero_scalar(x)) x = x * inv;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const F c = rows_[r][p];
            if (is_zero_scalar(c)) continue;
            subtract_scaled(rows_[r], v, c);
        }
        pivots_.push_back(p);
        rows_.push_back(std::move(v));
        return true;
    }

    bool contains(std::vector<F> v) const { return !reduce(v); }

    // the reduced echelon rows themselves; each has a unit pivot at a
    // column where every other row vanishes
    const std::vector<std::vector<F>>& rows() const { return rows_; }

private:
    std::size_t width_;
    std::vector<std::vector<F>> rows_;
    std::vector<std::size_t> pivots_;

    static void subtract_scaled(std::vector<F>& a, const std::vector<F>& b, const F& c) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (is_zero_scalar(b[j])) continue;
            a[j] -= c * b[j];
        }
    }

    static std::size_t leading_index(const std::vector<F>& v) {
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!is_zero_scalar(v[j])) return j;
        return v.size();
    }

    // returns true when a nonzero remainder is left in v
    bool reduce(std::vector<F>& v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const F c = v[pivots_[r]];
            if (is_zero_scalar(c)) continue;
            subtract_scaled(v, rows_[r], c);
        }
        return leading_index(v) != v.size();
    }
};

// Basis of the kernel of M (solutions of M x = 0) over the scalar field,
// by Gauss-Jordan elimination with fewest-term pivoting.
template <class F>
std::vector<std::vector<F>> nullspace_basis(const Matrix<F>& m) {
    const std::size_t cols = m.cols();
    std::vector<std::vector<F>> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        bool nonzero = false;
        for (std::size_t j = 0; j < cols; ++j)
            if (!is_zero_scalar(m(i, j))) {
                nonzero = true;
                break;
            }
        if (!nonzero) continue;
        std::vector<F> row(cols);
        for (std::size_t j = 0; j < cols; ++j) row[j] = m(i, j);
        rows.push_back(std::move(row));
    }

    std::vector<std::size_t> pivot_cols;
    std::size_t placed = 0;
    for (std::size_t col = 0; col < cols && placed < rows.size(); ++col) {
        std::size_t best = rows.size();
        std::size_t best_w = 0;
        for (std::size_t r = placed; r < rows.size(); ++r) {
            const F& x = rows[r][col];
            if (is_zero_scalar(x)) continue;
            const std::size_t w = scalar_weight(x);
            if (best == rows.size() || w < best_w) {
                best = r;
                best_w = w;
            }
        }
        if (best == rows.size()) continue;
        std::swap(rows[placed], rows[best]);
        auto& prow = rows[placed];
        const F inv = F(1) / prow[col];
        for (auto& x : prow)
            if (!is_zero_scalar(x)) x = x * inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == placed) continue;
            const F c = rows[r][col];
            if (is_zero_scalar(c)) continue;
            for (std::size_t j = 0; j < cols; ++j) {
                if (is_zero_scalar(prow[j])) continue;
                rows[r][j] -= c * prow[j];
            }
        }
        pivot_cols.push_back(col);
        ++placed;
    }

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<F> v(cols);
        v[f] = F(1);
        for (std::size_t r = 0; r < placed; ++r) {
            const F& c = rows[r][f];
            if (!is_zero_scalar(c)) v[pivot_cols[r]] = -c;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace detail {

template <class F>
void check_generators(const std::vector<Matrix<F>>& gens, std::size_t d) {
    for (const auto& g : gens)
        if (g.rows() != d || g.cols() != d)
            throw DimensionMismatch("generator size differs from the ambient dimension");
}

template <class F>
Matrix<F> unit_matrix(std::size_t d, std::size_t i, std::size_t j) {
    Matrix<F> e(d, d);
    e(i, j) = F(1);
    return e;
}

// Detects g = A (x) I_s with s > 1 maximal; the commutant then splits as
// commutant(A) (x) full matrix algebra.
template <class F>
std::optional<std::pair<Matrix<F>, std::size_t>> split_right_identity(const Matrix<F>& g) {
    const std::size_t d = g.rows();
    for (std::size_t s = d / 2; s >= 2; --s) {
        if (d % s != 0) continue;
        const std::size_t d1 = d / s;
        Matrix<F> a(d1, d1);
        for (std::size_t x = 0; x < d1; ++x)
            for (std::size_t y = 0; y < d1; ++y) a(x, y) = g(x * s, y * s);
        bool ok = true;
        for (std::size_t x = 0; x < d1 && ok; ++x)
            for (std::size_t y = 0; y < d1 && ok; ++y)
                for (std::size_t i = 0; i < s && ok; ++i)
                    for (std::size_t j = 0; j < s && ok; ++j) {
                        const F& v = g(x * s + i, y * s + j);
                        if (i == j) {
                            if (!(v == a(x, y))) ok = false;
                        } else if (!is_zero_scalar(v)) {
                            ok = false;
                        }
                    }
        if (ok) return std::make_pair(std::move(a), s);
    }
    return std::nullopt;
}

// Shrinks the span of `basis` to the part commuting with g: solves
// sum_b c_b (N_b g - g N_b) = 0 and returns the corresponding combinations.
template <class F>
std::vector<Matrix<F>> refine_commutant(const std::vector<Matrix<F>>& basis, const Matrix<F>& g) {
    const std::size_t d = g.rows();
    const std::size_t nb = basis.size();
    Matrix<F> constraints(d * d, nb);
    for (std::size_t b = 0; b < nb; ++b) {
        const Matrix<F> c = commutator(basis[b], g);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                constraints(i * d + j, b) = c(i, j);
    }
    std::vector<Matrix<F>> out;
    for (const auto& v : nullspace_basis(constraints)) {
        Matrix<F> acc(d, d);
        for (std::size_t b = 0; b < nb; ++b)
            if (!is_zero_scalar(v[b])) acc += basis[b].scaled(v[b]);
        out.push_back(std::move(acc));
    }
    return out;
}

// Commutant of a single generator with no exploitable structure: the
// homogeneous system over all d^2 matrix entries.
template <class F>
std::vector<Matrix<F>> single_commutant(const Matrix<F>& g) {
    const std::size_t d = g.rows();
    // constraint (k,l): sum_j X_kj g_jl - sum_i g_ki X_il = 0
    Matrix<F> constraints(d * d, d * d);
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) {
            const std::size_t row = k * d + l;
            for (std::size_t j = 0; j < d; ++j) {
                const F& v = g(j, l);
                if (!is_zero_scalar(v)) constraints(row, k * d + j) += v;
            }
            for (std::size_t i = 0; i < d; ++i) {
                const F& v = g(k, i);
                if (!is_zero_scalar(v)) constraints(row, i * d + l) -= v;
            }
        }
    std::vector<Matrix<F>> out;
    for (const auto& v : nullspace_basis(constraints)) {
        Matrix<F> x(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) x(i, j) = v[i * d + j];
        out.push_back(std::move(x));
    }
    return out;
}

} // namespace detail

// Basis of the smallest unital subalgebra of d x d matrices containing
// gens: seeded with the identity and the generators, then closed under
// right products with the generators breadth-first.
template <class F>
SpanBasis<F> algebra_closure(const std::vector<Matrix<F>>& gens, std::size_t d) {
    detail::check_generators(gens, d);
    SpanEchelon<F> echelon(d * d);
    std::vector<Matrix<F>> basis;
    auto try_add = [&](Matrix<F> m) {
        if (!echelon.insert(flatten(m))) return false;
        basis.push_back(std::move(m));
        return true;
    };
    try_add(Matrix<F>::identity(d));
    for (const auto& g : gens) try_add(g);
    std::size_t frontier_begin = 0;
    while (frontier_begin < basis.size()) {
        const std::size_t frontier_end = basis.size();
        for (std::size_t b = frontier_begin; b < frontier_end; ++b)
            for (const auto& g : gens) try_add(basis[b] * g);
        frontier_begin = frontier_end;
    }
    return {basis.size(), std::move(basis)};
}

// Basis of {X : X g = g X for every g in gens}, the solution space of the
// homogeneous linear system with d^2 unknowns. Diagonal generators are
// imposed jointly first (their common commutant is spanned by matrix
// units), and a leading A (x) I factor is split off when present; the
// remaining generators are imposed by elimination. `max_columns` bounds
// the widest intermediate solve; ResourceLimit is thrown past it.
template <class F>
SpanBasis<F> commutant(const std::vector<Matrix<F>>& gens, std::size_t d,
                       std::size_t max_columns = static_cast<std::size_t>(-1)) {
    detail::check_generators(gens, d);

    std::vector<const Matrix<F>*> diag, rest;
    for (const auto& g : gens) {
        if (g.is_scalar()) continue;  // commutes with everything
        (g.is_diagonal() ? diag : rest).push_back(&g);
    }

    std::vector<Matrix<F>> basis;
    bool have_basis = false;

    if (!diag.empty()) {
        // profile of index i across all diagonal generators
        std::vector<std::vector<F>> profile(d);
        for (std::size_t i = 0; i < d; ++i) {
            profile[i].reserve(diag.size());
            for (const auto* g : diag) profile[i].push_back((*g)(i, i));
        }
        std::size_t units = 0;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                if (profile[i] == profile[j]) ++units;
        if (units > max_columns)
            throw ResourceLimit("commutant intermediate exceeds the column budget");
        basis.reserve(units);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                if (profile[i] == profile[j])
                    basis.push_back(detail::unit_matrix<F>(d, i, j));
        have_basis = true;
    }

    for (const auto* gp : rest) {
        const Matrix<F>& g = *gp;
        if (!have_basis) {
            if (auto split = detail::split_right_identity(g)) {
                const auto& [inner, s] = *split;
                SpanBasis<F> ic = commutant(std::vector<Matrix<F>>{inner}, inner.rows(), max_columns);
                if (ic.dim * s * s > max_columns)
                    throw ResourceLimit("commutant intermediate exceeds the column budget");
                for (const auto& c : ic.basis)
                    for (std::size_t a = 0; a < s; ++a)
                        for (std::size_t b = 0; b < s; ++b)
                            basis.push_back(kron(c, detail::unit_matrix<F>(s, a, b)));
            } else {
                if (d * d > max_columns)
                    throw ResourceLimit("commutant intermediate exceeds the column budget");
                basis = detail::single_commutant(g);
            }
            have_basis = true;
            continue;
        }
        basis = detail::refine_commutant(basis, g);
    }

    if (!have_basis) {
        // only scalar generators: the commutant is everything
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                basis.push_back(detail::unit_matrix<F>(d, i, j));
    }

    // canonical reduced-echelon basis of the solution space; its unit
    // pivot structure keeps the members independent under any entrywise
    // evaluation at which they remain finite
    SpanEchelon<F> echelon(d * d);
    for (auto& b : basis) echelon.insert(flatten(b));
    std::vector<Matrix<F>> canonical;
    canonical.reserve(echelon.dim());
    for (const auto& row : echelon.rows()) {
        Matrix<F> m(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) m(i, j) = row[i * d + j];
        canonical.push_back(std::move(m));
    }
    return {canonical.size(), std::move(canonical)};
}

} // namespace swdual
