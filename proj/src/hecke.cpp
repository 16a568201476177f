#include "swdual/hecke.hpp"

#include <stdexcept>

namespace swdual {

namespace {

RatFunc q_minus_qinv() {
    return RatFunc(LaurentPoly::variable()) - RatFunc::q_power(-1);
}

int swap_sign(int k, int l, const SuperDims& dims) {
    return degree(k, dims) * degree(l, dims) == 1 ? -1 : 1;
}

} // namespace

Matrix<RatFunc> signed_q_swap(const SuperDims& dims) {
    validate_dims(dims);
    const int v = dims.total();
    const std::size_t d = static_cast<std::size_t>(v) * static_cast<std::size_t>(v);
    Matrix<RatFunc> t(d, d);
    const RatFunc qq = q_minus_qinv();
    // (q + q^-1) and the literal factor 1/2; the half cancels after
    // canonicalization in both parities
    const RatFunc qplus = RatFunc(LaurentPoly::variable()) + RatFunc::q_power(-1);
    const RatFunc half(BigRat(1, 2));
    for (int k = 1; k <= v; ++k) {
        for (int l = 1; l <= v; ++l) {
            const std::size_t row = encode({k, l}, dims);
            if (k == l) {
                const RatFunc sign(BigRat(degree(k, dims) == 0 ? 1 : -1));
                t(row, row) = (sign * qplus + qq) * half;
            } else {
                const std::size_t swapped = encode({l, k}, dims);
                t(row, swapped) = RatFunc(BigRat(swap_sign(k, l, dims)));
                if (k < l) t(row, row) = qq;
            }
        }
    }
    return t;
}

Matrix<RatFunc> generator_action(int i, const HeckeParams& p) {
    if (p.r < 2) throw std::out_of_range("no generators act on fewer than two factors");
    if (i < 1 || i > p.r - 1) throw std::out_of_range("generator index out of range");
    return lift_at(signed_q_swap(p.dims), i, p.r, p.dims);
}

RelationReport check_hecke_relations(const HeckeParams& p) {
    RelationReport report;
    if (p.r < 2) return report;
    const std::size_t d = tensor_dim(p.r, p.dims);
    const Matrix<RatFunc> id = Matrix<RatFunc>::identity(d);
    const RatFunc qq = q_minus_qinv();
    std::vector<Matrix<RatFunc>> gen;
    gen.reserve(static_cast<std::size_t>(p.r - 1));
    for (int i = 1; i <= p.r - 1; ++i) gen.push_back(generator_action(i, p));

    for (int i = 1; i <= p.r - 1; ++i) {
        const auto& g = gen[static_cast<std::size_t>(i - 1)];
        record_residual(report, "A1", {i}, g * g - g.scaled(qq) - id);
    }
    for (int i = 1; i <= p.r - 2; ++i) {
        const auto& a = gen[static_cast<std::size_t>(i - 1)];
        const auto& b = gen[static_cast<std::size_t>(i)];
        record_residual(report, "A2", {i, i + 1}, a * b * a - b * a * b);
    }
    for (int i = 1; i <= p.r - 1; ++i)
        for (int j = i + 2; j <= p.r - 1; ++j)
            record_residual(report, "A3", {i, j},
                            commutator(gen[static_cast<std::size_t>(i - 1)],
                                       gen[static_cast<std::size_t>(j - 1)]));
    return report;
}

Matrix<RatFunc> word_action(const std::vector<int>& word, const HeckeParams& p) {
    Matrix<RatFunc> out = Matrix<RatFunc>::identity(tensor_dim(p.r, p.dims));
    for (int i : word) out = out * generator_action(i, p);
    return out;
}

Matrix<RatFunc> rescaled_generator(int i, const HeckeParams& p) {
    return generator_action(i, p).scaled(RatFunc::variable());
}

Matrix<BigRat> signed_swap(const SuperDims& dims) {
    validate_dims(dims);
    const int v = dims.total();
    const std::size_t d = static_cast<std::size_t>(v) * static_cast<std::size_t>(v);
    Matrix<BigRat> t(d, d);
    for (int k = 1; k <= v; ++k)
        for (int l = 1; l <= v; ++l) {
            const std::size_t row = encode({k, l}, dims);
            if (k == l) {
                t(row, row) = BigRat(degree(k, dims) == 0 ? 1 : -1);
            } else {
                t(row, encode({l, k}, dims)) = BigRat(swap_sign(k, l, dims));
            }
        }
    return t;
}

} // namespace swdual
