#pragma once

#include <vector>

#include "swdual/relation_report.hpp"
#include "swdual/superspace.hpp"

namespace swdual {

// Weight in the dual lattice, written over the dual basis of the
// epsilon-coordinates: coords[b-1] is the pairing with epsilon_b.
using DualWeight = std::vector<long>;

// Root datum of gl(m,n): simple roots alpha_i = eps_i - eps_{i+1} with
// index set {1..m+n-1}, parity p(i) = 1 exactly at i = m, symmetrizing
// signs ell_i, and coroots determined by ell_i <h_i, w> = (alpha_i, w).
// When m = 0 or n = 0 the datum degenerates to the ungraded one: no odd
// index, parity identically zero.
struct RootDatum {
    SuperDims dims;
    std::vector<int> parity;               // parity[i-1] = p(i)
    std::vector<int> ell;                  // ell[i-1]
    std::vector<DualWeight> coroots;       // coroots[i-1] = h_i

    int rank() const { return dims.total() - 1; }
    // (eps_a, eps_a) = +1 for a <= m, -1 otherwise
    int eps_sign(int a) const { return a <= dims.m ? 1 : -1; }
    long pair(const DualWeight& h, int b) const { return h[static_cast<std::size_t>(b - 1)]; }
    // <h, alpha_j>
    long pair_alpha(const DualWeight& h, int j) const { return pair(h, j) - pair(h, j + 1); }
    // (alpha_i, alpha_j)
    long bilinear_alpha(int i, int j) const;
    DualWeight eps(int b) const;           // the dual-basis weight eps_b^*
    DualWeight scaled_coroot(int i) const; // ell_i * h_i
};

RootDatum build_root_datum(const SuperDims& dims);

// Symmetrizability and pairing-normalization invariants of the datum.
bool validate_root_datum(const RootDatum& rd);

// Generator of the quantum superalgebra: the involution, a Cartan element
// q^h, or a Chevalley generator.
struct Gen {
    enum class Kind { Sigma, QWeight, E, F } kind = Kind::Sigma;
    int index = 0;       // for E / F
    DualWeight weight;   // for QWeight

    static Gen sigma() { return {Kind::Sigma, 0, {}}; }
    static Gen q_weight(DualWeight h) { return {Kind::QWeight, 0, std::move(h)}; }
    static Gen e(int i) { return {Kind::E, i, {}}; }
    static Gen f(int i) { return {Kind::F, i, {}}; }
};

// Vector representation on V: sigma acts by the parity sign, q^h
// diagonally by q^{eps_j(h)}, e_i and f_i by the matrix units v_{i+1} ->
// v_i and v_i -> v_{i+1}. Column convention: M(out, in).
Matrix<RatFunc> vector_action(const Gen& g, const SuperDims& dims);

// Extension to the r-fold tensor space: sigma and q^h act as tensor
// powers; e_i and f_i by the twisted Leibniz sums with sigma^{p(i)} on
// the left and q^{-+ ell_i h_i} on the right.
Matrix<RatFunc> tensor_action(const Gen& g, int r, const RootDatum& rd);

// Defining relations on the tensor space: Cartan multiplicativity, the
// q^h-conjugation of e_i and f_i, the supercommutator identity
// [e_i, f_j] = delta_ij (q^{l h} - q^{-l h})/(q^l - q^-l), and the
// sigma-conjugation laws. All residuals must vanish exactly.
RelationReport check_qsuper_relations(const SuperDims& dims, int r);

// The two-site actions of e_k and f_k rebuilt from their closed case
// tables, compared entry for entry with the tensor extension.
RelationReport check_two_site_tables(const SuperDims& dims);

} // namespace swdual
