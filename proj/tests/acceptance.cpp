// Acceptance suite: one pass/fail line per criterion, exit status equal to
// the number of failing criteria. Expected dimension values are recomputed
// from the brute-force tableau oracles before being compared with the
// linear-algebra results.

#include <iostream>
#include <map>
#include <sstream>
#include <vector>

#include "oracles.hpp"
#include "swdual/centralizer.hpp"
#include "swdual/hecke.hpp"
#include "swdual/qsuper.hpp"
#include "swdual/superspace.hpp"

using namespace swdual;

namespace {

struct GridPoint {
    int m, n, r;
};

std::vector<GridPoint> verification_grid() {
    std::vector<GridPoint> grid;
    for (int m = 0; m <= 2; ++m)
        for (int n = 0; n <= 2; ++n) {
            if (m + n < 1) continue;
            for (int r = 2; r <= 4; ++r) {
                std::size_t d = 1;
                for (int i = 0; i < r; ++i) d *= static_cast<std::size_t>(m + n);
                if (d <= 81) grid.push_back({m, n, r});
            }
        }
    return grid;
}

int failures = 0;

void report(int criterion, const std::string& what, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what;
    if (!detail.empty()) std::cout << " — " << detail;
    std::cout << std::endl;
    if (!pass) ++failures;
}

// duality computations are shared between criteria 4, 5 and 7
std::map<std::tuple<int, int, int>, DualityComputation> duality_cache;

const DualityComputation& duality_full(int m, int n, int r) {
    const auto key = std::make_tuple(m, n, r);
    auto it = duality_cache.find(key);
    if (it == duality_cache.end()) {
        SolveOptions opts;
        opts.fallback = SolveOptions::Fallback::Skip;  // exact values only
        it = duality_cache.emplace(key, compute_double_centralizer(m, n, r, opts)).first;
    }
    return it->second;
}

const DualityReport& duality(int m, int n, int r) { return duality_full(m, n, r).report; }

// hook sums recomputed from enumeration: standard tableaux by brute-force
// placement, graded tableaux by the counting enumerator
struct OracleSums {
    BigInt f2 = 0, d2 = 0, fd = 0;
};

OracleSums oracle_sums(int m, int n, int r) {
    OracleSums sums;
    for (const auto& shape : hook_partitions(r, m, n)) {
        const BigInt f = oracles::count_standard_tableaux(shape);
        const BigInt d = graded_tableau_count(shape, m, n);
        sums.f2 += f * f;
        sums.d2 += d * d;
        sums.fd += f * d;
    }
    return sums;
}

void criterion_1_hecke_relations() {
    bool pass = true;
    std::ostringstream detail;
    for (const auto& g : verification_grid()) {
        if (!check_hecke_relations({{g.m, g.n}, g.r}).all_zero()) {
            pass = false;
            detail << " (" << g.m << "," << g.n << "," << g.r << ")";
        }
    }
    report(1, "Hecke relation residuals vanish on the grid", pass, detail.str());
}

void criterion_2_qsuper_relations() {
    bool pass = true;
    std::ostringstream detail;
    for (const auto& g : verification_grid()) {
        if (!check_qsuper_relations({g.m, g.n}, g.r).all_zero()) {
            pass = false;
            detail << " relations(" << g.m << "," << g.n << "," << g.r << ")";
        }
    }
    for (int m = 0; m <= 2; ++m)
        for (int n = 0; n <= 2; ++n) {
            if (m + n < 1) continue;
            if (!check_two_site_tables({m, n}).all_zero()) {
                pass = false;
                detail << " tables(" << m << "," << n << ")";
            }
        }
    report(2, "superalgebra relations and two-site tables hold", pass, detail.str());
}

void criterion_3_commutation() {
    bool pass = true;
    std::ostringstream detail;
    for (const auto& g : verification_grid()) {
        if (!verify_commutation(g.m, g.n, g.r).all_commute) {
            pass = false;
            detail << " (" << g.m << "," << g.n << "," << g.r << ")";
        }
    }
    report(3, "all generator pairs commute on the grid", pass, detail.str());
}

void criterion_4_double_centralizer() {
    struct Case {
        int m, n, r;
        std::size_t s, g;
    };
    // (dim S, dim G, dim commutant(G), dim commutant(S)) with
    // commutant(G) = dim S and commutant(S) = dim G
    const Case cases[] = {{1, 1, 2, 2, 8}, {1, 1, 3, 6, 12}, {1, 1, 4, 20, 16}, {2, 1, 3, 6, 129}};
    bool pass = true;
    std::ostringstream detail;
    for (const auto& c : cases) {
        const auto& rep = duality(c.m, c.n, c.r);
        const auto sums = oracle_sums(c.m, c.n, c.r);
        const bool frozen_ok = rep.hecke_image.dim == c.s && rep.super_image.dim == c.g &&
                               rep.commutant_of_super.dim == c.s &&
                               rep.commutant_of_hecke.dim == c.g;
        const bool oracle_ok = mpz_cmp_ui(sums.f2.get_mpz_t(), rep.hecke_image.dim) == 0 &&
                               mpz_cmp_ui(sums.d2.get_mpz_t(), rep.super_image.dim) == 0;
        const bool exact_ok = !rep.hecke_image.probabilistic && !rep.super_image.probabilistic &&
                              !rep.commutant_of_hecke.probabilistic &&
                              !rep.commutant_of_super.probabilistic && rep.double_centralizer &&
                              rep.mutual_commutation_checked && rep.mutual_commutation;
        detail << " (" << c.m << "," << c.n << "," << c.r << ")=(" << rep.hecke_image.dim << ","
               << rep.super_image.dim << "," << rep.commutant_of_super.dim << ","
               << rep.commutant_of_hecke.dim << ")";
        if (!(frozen_ok && oracle_ok && exact_ok)) pass = false;
    }
    report(4, "double-centralizer dimension quadruples", pass, detail.str());
}

void criterion_5_hook_decomposition() {
    bool pass = true;
    std::ostringstream detail;
    for (const auto& g : verification_grid()) {
        const auto sums = oracle_sums(g.m, g.n, g.r);
        BigInt total(1);
        for (int i = 0; i < g.r; ++i) total *= g.m + g.n;
        const auto& rep = duality(g.m, g.n, g.r);
        const bool counting_ok = sums.fd == total;
        const bool dim_ok = !rep.hecke_image.probabilistic &&
                            mpz_cmp_ui(sums.f2.get_mpz_t(), rep.hecke_image.dim) == 0;
        // exact super-side check where the exact solve ran
        const bool super_ok = !rep.super_image.computed ||
                              mpz_cmp_ui(sums.d2.get_mpz_t(), rep.super_image.dim) == 0;
        if (!(counting_ok && dim_ok && super_ok)) {
            pass = false;
            detail << " (" << g.m << "," << g.n << "," << g.r << ")";
        }
    }
    report(5, "hook counting identity and image dimensions on the grid", pass, detail.str());
}

void criterion_6_degenerations() {
    bool pass = true;
    std::ostringstream detail;

    // q -> 1 turns the two-site operator into the signed swap
    for (int m = 0; m <= 2; ++m)
        for (int n = 0; n <= 2; ++n) {
            if (m + n < 1) continue;
            if (specialize_matrix(signed_q_swap({m, n}), BigRat(1)) != signed_swap({m, n})) {
                pass = false;
                detail << " swap(" << m << "," << n << ")";
            }
        }

    // n = 0: no signs appear; every swap entry is +1 and equal-index
    // entries scale by q
    for (int m = 1; m <= 2; ++m) {
        const SuperDims dims{m, 0};
        const auto t = signed_q_swap(dims);
        const RatFunc qvar = RatFunc::variable();
        for (int k = 1; k <= m; ++k)
            for (int l = 1; l <= m; ++l) {
                const std::size_t row = encode({k, l}, dims);
                const bool ok = k == l ? t(row, row) == qvar
                                       : t(row, encode({l, k}, dims)) == RatFunc(1);
                if (!ok) {
                    pass = false;
                    detail << " sign(" << m << ",0)";
                }
            }
    }

    // (m,0)-hooks are exactly the shapes with at most m rows
    for (int m = 1; m <= 2; ++m)
        for (int r = 2; r <= 4; ++r)
            for (const auto& shape : partitions(r))
                if (is_hook_partition(shape, m, 0) != (static_cast<int>(shape.size()) <= m)) {
                    pass = false;
                    detail << " hooks(" << m << ",0," << r << ")";
                }

    // classical dimensions: (2,0), r = 3 gives dim S = 5
    const auto& rep = duality(2, 0, 3);
    if (rep.hecke_image.dim != 5 || rep.hecke_image.probabilistic) {
        pass = false;
        detail << " dimS(2,0,3)=" << rep.hecke_image.dim;
    }
    report(6, "q->1 and n=0 degenerations", pass, detail.str());
}

void criterion_7_specialization() {
    bool pass = true;
    std::ostringstream detail;
    const std::vector<BigRat> points{BigRat(1), BigRat(2), BigRat(3, 2)};
    for (const auto& g : verification_grid()) {
        const auto& exact = duality_full(g.m, g.n, g.r);
        for (const BigRat& t : points) {
            const auto probe = specialization_probe(g.m, g.n, g.r, t, {}, &exact);
            if (!probe.all_leq) {
                pass = false;
                detail << " leq(" << g.m << "," << g.n << "," << g.r << ";t=" << t.get_str()
                       << ")";
            }
            // genericity is required at 2 and 3/2; at 1 a drop is only reported
            if (t != 1 && !probe.all_equal) {
                pass = false;
                detail << " generic(" << g.m << "," << g.n << "," << g.r << ";t=" << t.get_str()
                       << ")";
            }
            if (t == 1 && !probe.all_equal)
                std::cout << "  note: rank drop at t=1 for (" << g.m << "," << g.n << ","
                          << g.r << ")" << std::endl;
        }
    }
    report(7, "specialized dimensions bounded by exact ones, generic at 2 and 3/2", pass,
           detail.str());
}

void criterion_8_word_well_definedness() {
    bool pass = true;
    std::ostringstream detail;
    const std::vector<SuperDims> spaces{{1, 1}, {2, 1}};
    for (const auto& dims : spaces)
        for (int r = 2; r <= 4; ++r) {
            if (tensor_dim(r, dims) > 81) continue;
            const HeckeParams p{dims, r};
            for (const auto& perm : oracles::all_permutations(r)) {
                const auto words = oracles::reduced_words(perm);
                const auto reference = word_action(words.at(0), p);
                for (std::size_t w = 1; w < words.size(); ++w)
                    if (word_action(words[w], p) != reference) {
                        pass = false;
                        detail << " (" << dims.m << "," << dims.n << "," << r << ")";
                    }
            }
        }
    report(8, "word action is constant across reduced words", pass, detail.str());
}

} // namespace

int main() {
    criterion_1_hecke_relations();
    criterion_2_qsuper_relations();
    criterion_3_commutation();
    criterion_4_double_centralizer();
    criterion_5_hook_decomposition();
    criterion_6_degenerations();
    criterion_7_specialization();
    criterion_8_word_well_definedness();
    std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "CRITERIA FAILED") << std::endl;
    return failures;
}
