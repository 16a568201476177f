#pragma once

#include <cstddef>
#include <vector>

#include "swdual/matrix.hpp"

namespace swdual {

// The Z2-graded space V = V_even (+) V_odd: basis vectors v_1..v_m are
// even, v_{m+1}..v_{m+n} odd.
struct SuperDims {
    int m = 0;
    int n = 0;
    int total() const { return m + n; }
    bool operator==(const SuperDims&) const = default;
};

void validate_dims(const SuperDims& dims);  // m, n >= 0, m + n >= 1

// degree of basis vector v_k (1-based): 0 if k <= m, 1 otherwise
int degree(int k, const SuperDims& dims);

// word of letters in 1..m+n encoding the basis tensor v_{k_1} (x) ... (x) v_{k_r}
using MultiIndex = std::vector<int>;

// (m+n)^r; throws ResourceLimit when the tensor space is too large to
// materialize densely
std::size_t tensor_dim(int r, const SuperDims& dims);

// row-major linear index with position 1 most significant
std::size_t encode(const MultiIndex& word, const SuperDims& dims);
MultiIndex decode(std::size_t index, int r, const SuperDims& dims);

// Kronecker lift of a two-site operator to positions i, i+1 of the r-fold
// tensor space, identity elsewhere.
Matrix<RatFunc> lift_at(const Matrix<RatFunc>& op2, int i, int r, const SuperDims& dims);

} // namespace swdual
