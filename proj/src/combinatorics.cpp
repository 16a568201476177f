#include "swdual/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace swdual {

namespace {

void gen_partitions(int remaining, int max_part, Partition& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        cur.push_back(part);
        gen_partitions(remaining - part, part, cur, out);
        cur.pop_back();
    }
}

void validate_partition(const Partition& lambda) {
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && lambda[i] > lambda[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

} // namespace

std::vector<Partition> partitions(int r) {
    if (r < 0) throw std::invalid_argument("partition size must be nonnegative");
    std::vector<Partition> out;
    Partition cur;
    gen_partitions(r, r, cur, out);
    if (r == 0) out = {{}};
    return out;
}

bool is_hook_partition(const Partition& lambda, int m, int n) {
    validate_partition(lambda);
    for (std::size_t j = static_cast<std::size_t>(m); j < lambda.size(); ++j)
        if (lambda[j] > n) return false;
    return true;
}

std::vector<Partition> hook_partitions(int r, int m, int n) {
    std::vector<Partition> out;
    for (auto& p : partitions(r))
        if (is_hook_partition(p, m, n)) out.push_back(std::move(p));
    return out;
}

Partition conjugate(const Partition& lambda) {
    validate_partition(lambda);
    Partition out;
    if (lambda.empty()) return out;
    out.resize(static_cast<std::size_t>(lambda[0]));
    for (std::size_t j = 0; j < out.size(); ++j) {
        int count = 0;
        for (int part : lambda)
            if (part > static_cast<int>(j)) ++count;
        out[j] = count;
    }
    return out;
}

BigInt standard_tableau_count(const Partition& lambda) {
    validate_partition(lambda);
    int boxes = 0;
    for (int part : lambda) boxes += part;
    const Partition conj = conjugate(lambda);
    BigInt num;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(boxes));
    for (std::size_t i = 0; i < lambda.size(); ++i)
        for (int j = 0; j < lambda[i]; ++j) {
            const long hook = lambda[i] - j + conj[static_cast<std::size_t>(j)] -
                              static_cast<long>(i) - 1;
            mpz_divexact_ui(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(hook));
        }
    return num;
}

BigInt graded_tableau_count(const Partition& lambda, int m, int n) {
    validate_partition(lambda);
    if (m < 0 || n < 0) throw std::invalid_argument("need m, n >= 0");
    if (lambda.empty()) return BigInt(1);

    // letters 0..m-1 even, m..m+n-1 odd, in that total order
    const int letters = m + n;
    std::vector<std::vector<int>> fill(lambda.size());
    for (std::size_t i = 0; i < lambda.size(); ++i)
        fill[i].assign(static_cast<std::size_t>(lambda[i]), -1);

    BigInt count(0);
    std::function<void(std::size_t, std::size_t)> place = [&](std::size_t row, std::size_t col) {
        if (row == lambda.size()) {
            ++count;
            return;
        }
        const std::size_t next_col = col + 1 < fill[row].size() ? col + 1 : 0;
        const std::size_t next_row = col + 1 < fill[row].size() ? row : row + 1;
        const int left = col > 0 ? fill[row][col - 1] : -1;
        const int up = row > 0 && col < fill[row - 1].size() ? fill[row - 1][col] : -1;
        for (int a = 0; a < letters; ++a) {
            const bool even = a < m;
            // rows: weakly increasing, repeats only for even letters
            if (left >= 0 && (a < left || (a == left && !even))) continue;
            // columns: weakly increasing, repeats only for odd letters
            if (up >= 0 && (a < up || (a == up && even))) continue;
            fill[row][col] = a;
            place(next_row, next_col);
        }
        fill[row][col] = -1;
    };
    place(0, 0);
    return count;
}

DimensionIdentity dimension_identity(int m, int n, int r) {
    DimensionIdentity out;
    out.m = m;
    out.n = n;
    out.r = r;
    out.rhs = 1;
    for (int i = 0; i < r; ++i) out.rhs *= m + n;
    out.lhs = 0;
    for (const auto& shape : hook_partitions(r, m, n)) {
        DimensionIdentity::Entry e{shape, standard_tableau_count(shape),
                                   graded_tableau_count(shape, m, n)};
        out.lhs += e.f * e.d;
        out.entries.push_back(std::move(e));
    }
    out.holds = out.lhs == out.rhs;
    return out;
}

} // namespace swdual
