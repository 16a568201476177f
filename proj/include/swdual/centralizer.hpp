#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "swdual/combinatorics.hpp"
#include "swdual/linalg.hpp"

namespace swdual {

struct SolveOptions {
    // commutant solves and the super-side closure are exact up to this
    // ambient dimension; above it the fallback policy applies
    std::size_t exact_threshold = 32;

    // Probabilistic: maximum rank over seeded random rational
    //   specializations, flagged in the report; solves whose intermediates
    //   exceed `fallback_budget` columns come back as not computed.
    // Skip: report the value as not computed.
    // Error: throw ResourceLimit.
    enum class Fallback { Probabilistic, Skip, Error } fallback = Fallback::Probabilistic;

    std::uint64_t seed = 20231115;
    int fallback_samples = 3;
    std::size_t fallback_budget = 4096;
};

// A computed dimension. `probabilistic` marks values obtained as the
// maximum rank over random rational specializations (a lower bound on the
// generic value, attained at generic points); `computed` is false when
// the value was skipped entirely.
struct DimValue {
    std::size_t dim = 0;
    bool probabilistic = false;
    bool computed = false;
};

std::vector<Matrix<RatFunc>> hecke_generator_matrices(int m, int n, int r);
std::vector<Matrix<RatFunc>> super_generator_matrices(int m, int n, int r);

struct CommutationReport {
    int m = 0, n = 0, r = 0;
    std::size_t pairs_checked = 0;
    bool all_commute = false;
    std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
};

// Every (Hecke generator, superalgebra generator) pair must have an
// exactly vanishing commutator.
CommutationReport verify_commutation(int m, int n, int r);

struct DualityReport {
    int m = 0, n = 0, r = 0;
    DimValue hecke_image;             // dim of the algebra generated by the Hecke action
    DimValue super_image;             // dim of the algebra generated by the super action
    DimValue commutant_of_hecke;
    DimValue commutant_of_super;
    BigInt hook_sum_f2;               // sum over (m,n)-hooks of f^2
    BigInt hook_sum_d2;               // sum of d^2
    BigInt hook_sum_fd;               // sum of f*d
    bool mutual_commutation_checked = false;
    bool mutual_commutation = false;  // closure bases commute with the other side's generators
    bool double_centralizer = false;  // image dims equal the opposite commutant dims
    bool hecke_dim_matches_hooks = false;  // dim of Hecke image equals sum of f^2
};

// Full computation: the report plus the exact bases behind it (empty for
// values that were skipped or obtained probabilistically).
struct DualityComputation {
    DualityReport report;
    SpanBasis<RatFunc> hecke_image_basis;
    SpanBasis<RatFunc> super_image_basis;
    SpanBasis<RatFunc> commutant_of_hecke_basis;
    SpanBasis<RatFunc> commutant_of_super_basis;
};

DualityComputation compute_double_centralizer(int m, int n, int r, const SolveOptions& opts = {});
DualityReport verify_double_centralizer(int m, int n, int r, const SolveOptions& opts = {});

struct HookReport {
    int m = 0, n = 0, r = 0;
    DimValue hecke_image;
    DimValue super_image;
    BigInt hook_sum_f2, hook_sum_d2, hook_sum_fd;
    BigInt tensor_dim;
    bool counting_identity = false;   // sum f*d = (m+n)^r
    bool hecke_dim_matches = false;   // dim Hecke image = sum f^2
    bool super_dim_checked = false;
    bool super_dim_matches = false;   // dim super image = sum d^2 (when computed)
    bool passes() const {
        return counting_identity && hecke_dim_matches && (!super_dim_checked || super_dim_matches);
    }
};

HookReport verify_hook_decomposition(int m, int n, int r, const SolveOptions& opts = {});

struct SpecializationReport {
    int m = 0, n = 0, r = 0;
    BigRat t;
    struct Pair {
        std::string name;
        DimValue exact;
        std::size_t specialized = 0;
        bool specialized_computed = false;
        bool leq = false;    // specialized <= exact
        bool equal = false;
    };
    std::vector<Pair> dims;
    bool all_leq = false;
    bool all_equal = false;  // t behaved generically on every compared dimension
};

// Evaluates the exact bases entrywise at q = t and compares the rank of
// each specialized span with the exact dimension; the rank can only drop,
// and equals the exact value at generic t. Dimensions without an exact
// basis (skipped or probabilistic values) are left uncompared, as are
// bases with a denominator vanishing at t.
SpecializationReport specialization_probe(int m, int n, int r, const BigRat& t,
                                          const SolveOptions& opts = {},
                                          const DualityComputation* precomputed = nullptr);

} // namespace swdual
