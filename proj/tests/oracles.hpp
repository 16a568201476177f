#pragma once

// Independent reference implementations used to pin expected values.
// Everything here is deliberately naive and shares no code path with the
// routines under test.

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "swdual/combinatorics.hpp"
#include "swdual/matrix.hpp"

namespace oracles {

using swdual::BigInt;
using swdual::Matrix;
using swdual::Partition;

// Textbook Gauss-Jordan rank over a field: first nonzero pivot, no
// pivoting strategy, no fraction-free step.
template <class F>
std::size_t plain_rank(Matrix<F> m) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot = m.rows();
        for (std::size_t r = rank; r < m.rows(); ++r)
            if (!swdual::is_zero_scalar(m(r, col))) {
                pivot = r;
                break;
            }
        if (pivot == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(rank, j), m(pivot, j));
        const F inv = F(1) / m(rank, col);
        for (std::size_t j = 0; j < m.cols(); ++j) m(rank, j) = m(rank, j) * inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == rank) continue;
            const F c = m(r, col);
            if (swdual::is_zero_scalar(c)) continue;
            for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) -= c * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

// Rank of the span of a set of matrices, stacked as flat row vectors.
template <class F>
std::size_t span_rank(const std::vector<Matrix<F>>& mats) {
    if (mats.empty()) return 0;
    const std::size_t w = mats[0].rows() * mats[0].cols();
    Matrix<F> stacked(mats.size(), w);
    for (std::size_t i = 0; i < mats.size(); ++i) {
        const auto flat = swdual::flatten(mats[i]);
        for (std::size_t j = 0; j < w; ++j) stacked(i, j) = flat[j];
    }
    return plain_rank(std::move(stacked));
}

// Dimension of the unital algebra generated by `gens`, by enumerating all
// words up to the given length and taking the rank of their span.
template <class F>
std::size_t word_span_dim(const std::vector<Matrix<F>>& gens, std::size_t d,
                          int max_len) {
    std::vector<Matrix<F>> words{Matrix<F>::identity(d)};
    std::size_t begin = 0;
    for (int len = 1; len <= max_len; ++len) {
        const std::size_t end = words.size();
        for (std::size_t i = begin; i < end; ++i)
            for (const auto& g : gens) words.push_back(words[i] * g);
        begin = end;
    }
    return span_rank(words);
}

// Standard Young tableaux of the given shape, counted by brute-force
// placement of 1..N.
inline BigInt count_standard_tableaux(const Partition& shape) {
    int boxes = 0;
    for (int part : shape) boxes += part;
    std::vector<std::vector<int>> fill(shape.size());
    for (std::size_t i = 0; i < shape.size(); ++i)
        fill[i].assign(static_cast<std::size_t>(shape[i]), 0);
    BigInt count(0);
    std::function<void(int)> place = [&](int next) {
        if (next > boxes) {
            ++count;
            return;
        }
        for (std::size_t i = 0; i < fill.size(); ++i) {
            std::size_t j = 0;
            while (j < fill[i].size() && fill[i][j] != 0) ++j;
            if (j == fill[i].size()) continue;
            if (i > 0 && (fill[i - 1].size() <= j || fill[i - 1][j] == 0)) continue;
            fill[i][j] = next;
            place(next + 1);
            fill[i][j] = 0;
        }
    };
    place(1);
    return count;
}

// Permutations of 1..n as vectors, their lengths, and all reduced words.
inline std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline int inversions(const std::vector<int>& p) {
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv;
}

// All reduced words of p: descend along descents of the one-line form.
inline std::vector<std::vector<int>> reduced_words(std::vector<int> p) {
    if (inversions(p) == 0) return {{}};
    std::vector<std::vector<int>> out;
    for (int i = 1; i + 1 <= static_cast<int>(p.size()); ++i) {
        // right multiplication by s_i swaps positions i, i+1
        if (p[static_cast<std::size_t>(i - 1)] > p[static_cast<std::size_t>(i)]) {
            std::vector<int> shorter = p;
            std::swap(shorter[static_cast<std::size_t>(i - 1)], shorter[static_cast<std::size_t>(i)]);
            for (auto word : reduced_words(std::move(shorter))) {
                word.push_back(i);
                out.push_back(std::move(word));
            }
        }
    }
    return out;
}

} // namespace oracles
