#include "swdual/superspace.hpp"

#include <stdexcept>

namespace swdual {

void validate_dims(const SuperDims& dims) {
    if (dims.m < 0 || dims.n < 0 || dims.total() < 1)
        throw std::invalid_argument("need m, n >= 0 and m + n >= 1");
}

int degree(int k, const SuperDims& dims) {
    if (k < 1 || k > dims.total())
        throw std::out_of_range("basis index out of range");
    return k <= dims.m ? 0 : 1;
}

std::size_t tensor_dim(int r, const SuperDims& dims) {
    validate_dims(dims);
    if (r < 0) throw std::invalid_argument("tensor power must be nonnegative");
    constexpr std::size_t kMaxDim = 1u << 20;
    std::size_t d = 1;
    for (int i = 0; i < r; ++i) {
        d *= static_cast<std::size_t>(dims.total());
        if (d > kMaxDim) throw ResourceLimit("tensor space dimension too large");
    }
    return d;
}

std::size_t encode(const MultiIndex& word, const SuperDims& dims) {
    std::size_t idx = 0;
    for (int k : word) {
        if (k < 1 || k > dims.total())
            throw std::out_of_range("letter out of range in multi-index");
        idx = idx * static_cast<std::size_t>(dims.total()) + static_cast<std::size_t>(k - 1);
    }
    return idx;
}

MultiIndex decode(std::size_t index, int r, const SuperDims& dims) {
    if (index >= tensor_dim(r, dims))
        throw std::out_of_range("linear index out of range");
    MultiIndex word(static_cast<std::size_t>(r));
    for (int pos = r - 1; pos >= 0; --pos) {
        word[static_cast<std::size_t>(pos)] =
            static_cast<int>(index % static_cast<std::size_t>(dims.total())) + 1;
        index /= static_cast<std::size_t>(dims.total());
    }
    return word;
}

Matrix<RatFunc> lift_at(const Matrix<RatFunc>& op2, int i, int r, const SuperDims& dims) {
    const std::size_t v = static_cast<std::size_t>(dims.total());
    if (op2.rows() != v * v || op2.cols() != v * v)
        throw DimensionMismatch("two-site operator has the wrong size");
    if (i < 1 || i > r - 1)
        throw std::out_of_range("lift position out of range");
    std::size_t left = 1, right = 1;
    for (int k = 0; k < i - 1; ++k) left *= v;
    for (int k = i + 1; k < r; ++k) right *= v;
    return kron(kron(Matrix<RatFunc>::identity(left), op2), Matrix<RatFunc>::identity(right));
}

} // namespace swdual
