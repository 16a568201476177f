#pragma once

#include <vector>

#include "swdual/rational.hpp"

namespace swdual {

// weakly decreasing positive parts
using Partition = std::vector<int>;

// All partitions of r in reverse lexicographic order, e.g.
// (3), (2,1), (1,1,1).
std::vector<Partition> partitions(int r);

// lambda_j <= n for every row j > m
bool is_hook_partition(const Partition& lambda, int m, int n);

std::vector<Partition> hook_partitions(int r, int m, int n);

Partition conjugate(const Partition& lambda);

// Number of standard Young tableaux of the given shape (hook length rule).
BigInt standard_tableau_count(const Partition& lambda);

// Number of (m,n)-semistandard tableaux: entries from m even letters
// followed by n odd letters; even letters repeat along rows but not down
// columns, odd letters repeat down columns but not along rows. Counted by
// direct enumeration; 0 exactly when the shape is not an (m,n)-hook.
BigInt graded_tableau_count(const Partition& lambda, int m, int n);

struct DimensionIdentity {
    int m = 0, n = 0, r = 0;
    BigInt lhs;        // sum over (m,n)-hooks of f * d
    BigInt rhs;        // (m+n)^r
    bool holds = false;
    struct Entry {
        Partition shape;
        BigInt f;
        BigInt d;
    };
    std::vector<Entry> entries;
};

// Checks sum_{hooks} f_lambda * d_lambda(m,n) = (m+n)^r.
DimensionIdentity dimension_identity(int m, int n, int r);

} // namespace swdual
