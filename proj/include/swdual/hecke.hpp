#pragma once

#include <vector>

#include "swdual/relation_report.hpp"
#include "swdual/superspace.hpp"

namespace swdual {

struct HeckeParams {
    SuperDims dims;
    int r = 1;
};

// The two-site right operator deforming the signed swap of adjacent
// tensor factors. Stored with rows indexed by the input basis tensor, so
// a right action reads (row vector) * matrix and composition is the plain
// matrix product. The matrix is symmetric.
Matrix<RatFunc> signed_q_swap(const SuperDims& dims);

// Action of the i-th generator on the r-fold tensor space (the two-site
// operator lifted to positions i, i+1). Requires 1 <= i <= r-1.
Matrix<RatFunc> generator_action(int i, const HeckeParams& p);

// Quadratic, braid and distant-commutation identities of all generator
// actions; every residual must vanish exactly. r = 1 has no generators
// and passes vacuously.
RelationReport check_hecke_relations(const HeckeParams& p);

// Ordered product of generator actions for a word in the generators.
Matrix<RatFunc> word_action(const std::vector<int>& word, const HeckeParams& p);

// Generator of the rescaled presentation (quadratic relation
// X^2 = (q^2 - 1) X + q^2): q times the plain generator action.
Matrix<RatFunc> rescaled_generator(int i, const HeckeParams& p);

// The q -> 1 limit of the two-site operator: the signed swap.
Matrix<BigRat> signed_swap(const SuperDims& dims);

} // namespace swdual
