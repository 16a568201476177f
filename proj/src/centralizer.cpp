#include "swdual/centralizer.hpp"

#include <random>

#include "swdual/hecke.hpp"
#include "swdual/qsuper.hpp"

namespace swdual {

std::vector<Matrix<RatFunc>> hecke_generator_matrices(int m, int n, int r) {
    if (r < 1) throw std::invalid_argument("tensor power must be at least 1");
    HeckeParams p{{m, n}, r};
    validate_dims(p.dims);
    std::vector<Matrix<RatFunc>> gens;
    for (int i = 1; i <= r - 1; ++i) gens.push_back(generator_action(i, p));
    return gens;
}

std::vector<Matrix<RatFunc>> super_generator_matrices(int m, int n, int r) {
    if (r < 1) throw std::invalid_argument("tensor power must be at least 1");
    const RootDatum rd = build_root_datum({m, n});
    std::vector<Matrix<RatFunc>> gens;
    gens.push_back(tensor_action(Gen::sigma(), r, rd));
    for (int b = 1; b <= rd.dims.total(); ++b) {
        DualWeight h = rd.eps(b);
        gens.push_back(tensor_action(Gen::q_weight(h), r, rd));
        for (auto& c : h) c = -c;
        gens.push_back(tensor_action(Gen::q_weight(h), r, rd));
    }
    for (int i = 1; i <= rd.rank(); ++i) {
        gens.push_back(tensor_action(Gen::e(i), r, rd));
        gens.push_back(tensor_action(Gen::f(i), r, rd));
    }
    return gens;
}

CommutationReport verify_commutation(int m, int n, int r) {
    CommutationReport report;
    report.m = m;
    report.n = n;
    report.r = r;
    const auto hecke = hecke_generator_matrices(m, n, r);
    const auto super = super_generator_matrices(m, n, r);
    report.all_commute = true;
    for (std::size_t a = 0; a < hecke.size(); ++a)
        for (std::size_t b = 0; b < super.size(); ++b) {
            ++report.pairs_checked;
            if (!commutator(hecke[a], super[b]).is_zero()) {
                report.all_commute = false;
                if (!report.failing_pair) report.failing_pair = {a, b};
            }
        }
    return report;
}

namespace {

// seeded stream of admissible rational points (t not in {0, +-1})
std::vector<BigRat> fallback_points(const SolveOptions& opts) {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<int> num_dist(-12, 12);
    std::uniform_int_distribution<int> den_dist(1, 12);
    std::vector<BigRat> points;
    while (points.size() < static_cast<std::size_t>(opts.fallback_samples)) {
        BigRat t(num_dist(rng), den_dist(rng));
        t.canonicalize();
        if (sgn(t) == 0 || t == 1 || t == -1) continue;
        if (std::find(points.begin(), points.end(), t) != points.end()) continue;
        points.push_back(std::move(t));
    }
    return points;
}

std::vector<Matrix<BigRat>> specialize_all(const std::vector<Matrix<RatFunc>>& gens,
                                           const BigRat& t) {
    std::vector<Matrix<BigRat>> out;
    out.reserve(gens.size());
    for (const auto& g : gens) out.push_back(specialize_matrix(g, t));
    return out;
}

enum class Solve { Closure, Commutant };

std::size_t solve_dim(Solve kind, const std::vector<Matrix<BigRat>>& gens, std::size_t d,
                      std::size_t budget = static_cast<std::size_t>(-1)) {
    return kind == Solve::Closure ? algebra_closure(gens, d).dim
                                  : commutant(gens, d, budget).dim;
}

// exact when d is at or below the threshold, otherwise per the fallback
// policy (maximum rank over seeded random specializations, skipped, or a
// hard error)
DimValue dim_with_policy(Solve kind, const std::vector<Matrix<RatFunc>>& gens, std::size_t d,
                         const SolveOptions& opts,
                         SpanBasis<RatFunc>* exact_basis_out = nullptr) {
    DimValue out;
    if (d <= opts.exact_threshold) {
        SpanBasis<RatFunc> basis =
            kind == Solve::Closure ? algebra_closure(gens, d) : commutant(gens, d);
        out.dim = basis.dim;
        out.computed = true;
        if (exact_basis_out) *exact_basis_out = std::move(basis);
        return out;
    }
    switch (opts.fallback) {
    case SolveOptions::Fallback::Error:
        throw ResourceLimit("dimension above the exact-arithmetic threshold and fallback disabled");
    case SolveOptions::Fallback::Skip:
        return out;
    case SolveOptions::Fallback::Probabilistic:
        break;
    }
    try {
        for (const BigRat& t : fallback_points(opts))
            out.dim = std::max(out.dim,
                               solve_dim(kind, specialize_all(gens, t), d, opts.fallback_budget));
        out.probabilistic = true;
        out.computed = true;
    } catch (const ResourceLimit&) {
        return DimValue{};
    }
    return out;
}

void fill_hook_sums(int m, int n, int r, BigInt& f2, BigInt& d2, BigInt& fd) {
    f2 = 0;
    d2 = 0;
    fd = 0;
    for (const auto& shape : hook_partitions(r, m, n)) {
        const BigInt f = standard_tableau_count(shape);
        const BigInt d = graded_tableau_count(shape, m, n);
        f2 += f * f;
        d2 += d * d;
        fd += f * d;
    }
}

bool basis_commutes_with(const std::vector<Matrix<RatFunc>>& basis,
                         const std::vector<Matrix<RatFunc>>& gens) {
    for (const auto& b : basis)
        for (const auto& g : gens)
            if (!commutator(b, g).is_zero()) return false;
    return true;
}

} // namespace

DualityComputation compute_double_centralizer(int m, int n, int r, const SolveOptions& opts) {
    DualityComputation out;
    DualityReport& report = out.report;
    report.m = m;
    report.n = n;
    report.r = r;
    const std::size_t d = tensor_dim(r, {m, n});
    const auto hecke = hecke_generator_matrices(m, n, r);
    const auto super = super_generator_matrices(m, n, r);

    // the Hecke image is small (dim <= r!), so its closure is always exact
    out.hecke_image_basis = algebra_closure(hecke, d);
    report.hecke_image = {out.hecke_image_basis.dim, false, true};

    report.super_image = dim_with_policy(Solve::Closure, super, d, opts, &out.super_image_basis);
    report.commutant_of_hecke =
        dim_with_policy(Solve::Commutant, hecke, d, opts, &out.commutant_of_hecke_basis);
    report.commutant_of_super =
        dim_with_policy(Solve::Commutant, super, d, opts, &out.commutant_of_super_basis);

    if (report.super_image.computed && !report.super_image.probabilistic) {
        report.mutual_commutation_checked = true;
        report.mutual_commutation = basis_commutes_with(out.hecke_image_basis.basis, super) &&
                                    basis_commutes_with(out.super_image_basis.basis, hecke);
    }

    fill_hook_sums(m, n, r, report.hook_sum_f2, report.hook_sum_d2, report.hook_sum_fd);
    report.double_centralizer =
        report.hecke_image.computed && report.super_image.computed &&
        report.commutant_of_hecke.computed && report.commutant_of_super.computed &&
        report.hecke_image.dim == report.commutant_of_super.dim &&
        report.super_image.dim == report.commutant_of_hecke.dim;
    report.hecke_dim_matches_hooks =
        mpz_cmp_ui(report.hook_sum_f2.get_mpz_t(), report.hecke_image.dim) == 0;
    return out;
}

DualityReport verify_double_centralizer(int m, int n, int r, const SolveOptions& opts) {
    return compute_double_centralizer(m, n, r, opts).report;
}

HookReport verify_hook_decomposition(int m, int n, int r, const SolveOptions& opts) {
    HookReport report;
    report.m = m;
    report.n = n;
    report.r = r;
    const std::size_t d = tensor_dim(r, {m, n});
    fill_hook_sums(m, n, r, report.hook_sum_f2, report.hook_sum_d2, report.hook_sum_fd);
    report.tensor_dim = static_cast<unsigned long>(d);
    report.counting_identity = report.hook_sum_fd == report.tensor_dim;

    const auto hecke = hecke_generator_matrices(m, n, r);
    report.hecke_image = {algebra_closure(hecke, d).dim, false, true};
    report.hecke_dim_matches =
        mpz_cmp_ui(report.hook_sum_f2.get_mpz_t(), report.hecke_image.dim) == 0;

    const auto super = super_generator_matrices(m, n, r);
    report.super_image = dim_with_policy(Solve::Closure, super, d, opts);
    report.super_dim_checked = report.super_image.computed;
    report.super_dim_matches =
        report.super_dim_checked &&
        mpz_cmp_ui(report.hook_sum_d2.get_mpz_t(), report.super_image.dim) == 0;
    return report;
}

namespace {

// rank of the span of the basis matrices after entrywise evaluation at t
std::size_t specialized_span_rank(const SpanBasis<RatFunc>& basis, const BigRat& t,
                                  std::size_t d) {
    Matrix<BigRat> stacked(basis.basis.size(), d * d);
    for (std::size_t b = 0; b < basis.basis.size(); ++b) {
        const Matrix<RatFunc>& mat = basis.basis[b];
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                const RatFunc& x = mat(i, j);
                if (!x.is_zero()) stacked(b, i * d + j) = x.specialize(t);
            }
    }
    return rank(std::move(stacked));
}

} // namespace

SpecializationReport specialization_probe(int m, int n, int r, const BigRat& t,
                                          const SolveOptions& opts,
                                          const DualityComputation* precomputed) {
    if (sgn(t) == 0) throw BadSpecialization("specialization requires a nonzero point");
    SpecializationReport report;
    report.m = m;
    report.n = n;
    report.r = r;
    report.t = t;

    DualityComputation local;
    if (!precomputed) {
        local = compute_double_centralizer(m, n, r, opts);
        precomputed = &local;
    }
    const std::size_t d = tensor_dim(r, {m, n});

    auto add_pair = [&](const std::string& name, const DimValue& exact, auto&& value) {
        SpecializationReport::Pair pair;
        pair.name = name;
        pair.exact = exact;
        // only exact values give a valid upper bound to compare against
        if (exact.computed && !exact.probabilistic) {
            try {
                pair.specialized = value();
                pair.specialized_computed = true;
                pair.leq = pair.specialized <= exact.dim;
                pair.equal = pair.specialized == exact.dim;
            } catch (const BadSpecialization&) {
                // a basis denominator vanishes at t
            }
        }
        report.dims.push_back(std::move(pair));
    };

    // image dimensions: the algebra generated by the specialized
    // generators (the specialized span of all generator words)
    const auto hecke = hecke_generator_matrices(m, n, r);
    const auto super = super_generator_matrices(m, n, r);
    add_pair("hecke_image", precomputed->report.hecke_image,
             [&] { return algebra_closure(specialize_all(hecke, t), d).dim; });
    add_pair("super_image", precomputed->report.super_image,
             [&] { return algebra_closure(specialize_all(super, t), d).dim; });
    // commutant dimensions: the exact solution bases evaluated at t
    add_pair("commutant_of_hecke", precomputed->report.commutant_of_hecke,
             [&] { return specialized_span_rank(precomputed->commutant_of_hecke_basis, t, d); });
    add_pair("commutant_of_super", precomputed->report.commutant_of_super,
             [&] { return specialized_span_rank(precomputed->commutant_of_super_basis, t, d); });

    report.all_leq = true;
    report.all_equal = true;
    for (const auto& pair : report.dims) {
        if (!pair.specialized_computed) continue;
        report.all_leq = report.all_leq && pair.leq;
        report.all_equal = report.all_equal && pair.equal;
    }
    return report;
}

} // namespace swdual
