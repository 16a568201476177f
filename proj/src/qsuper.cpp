#include "swdual/qsuper.hpp"

#include <stdexcept>

namespace swdual {

long RootDatum::bilinear_alpha(int i, int j) const {
    // (eps_i - eps_{i+1}, eps_j - eps_{j+1})
    long v = 0;
    if (i == j) v += eps_sign(i) + eps_sign(i + 1);
    if (i == j + 1) v -= eps_sign(i);
    if (i + 1 == j) v -= eps_sign(j);
    return v;
}

DualWeight RootDatum::eps(int b) const {
    DualWeight h(static_cast<std::size_t>(dims.total()), 0);
    h[static_cast<std::size_t>(b - 1)] = 1;
    return h;
}

DualWeight RootDatum::scaled_coroot(int i) const {
    DualWeight h = coroots[static_cast<std::size_t>(i - 1)];
    if (ell[static_cast<std::size_t>(i - 1)] == -1)
        for (auto& c : h) c = -c;
    return h;
}

RootDatum build_root_datum(const SuperDims& dims) {
    validate_dims(dims);
    RootDatum rd;
    rd.dims = dims;
    const int rank = dims.total() - 1;
    for (int i = 1; i <= rank; ++i) {
        const bool odd = dims.m >= 1 && dims.n >= 1 && i == dims.m;
        rd.parity.push_back(odd ? 1 : 0);
        rd.ell.push_back(i <= dims.m ? 1 : -1);
        DualWeight h(static_cast<std::size_t>(dims.total()), 0);
        h[static_cast<std::size_t>(i - 1)] = 1;
        h[static_cast<std::size_t>(i)] = odd ? 1 : -1;
        rd.coroots.push_back(std::move(h));
    }
    return rd;
}

bool validate_root_datum(const RootDatum& rd) {
    for (int i = 1; i <= rd.rank(); ++i) {
        const DualWeight& h = rd.coroots[static_cast<std::size_t>(i - 1)];
        const long ell = rd.ell[static_cast<std::size_t>(i - 1)];
        for (int j = 1; j <= rd.rank(); ++j)
            if (ell * rd.pair_alpha(h, j) != rd.bilinear_alpha(i, j)) return false;
        const long self = rd.pair_alpha(h, i);
        if (rd.parity[static_cast<std::size_t>(i - 1)] == 1 ? self != 0 : self != 2)
            return false;
    }
    return true;
}

Matrix<RatFunc> vector_action(const Gen& g, const SuperDims& dims) {
    validate_dims(dims);
    const int v = dims.total();
    const std::size_t d = static_cast<std::size_t>(v);
    Matrix<RatFunc> out(d, d);
    switch (g.kind) {
    case Gen::Kind::Sigma:
        for (int j = 1; j <= v; ++j)
            out(j - 1, j - 1) = RatFunc(BigRat(degree(j, dims) == 0 ? 1 : -1));
        break;
    case Gen::Kind::QWeight:
        if (g.weight.size() != d) throw DimensionMismatch("weight length differs from dim V");
        for (int j = 1; j <= v; ++j)
            out(j - 1, j - 1) = RatFunc::q_power(g.weight[static_cast<std::size_t>(j - 1)]);
        break;
    case Gen::Kind::E:
        if (g.index < 1 || g.index > v - 1) throw std::out_of_range("generator index out of range");
        out(g.index - 1, g.index) = RatFunc(1);
        break;
    case Gen::Kind::F:
        if (g.index < 1 || g.index > v - 1) throw std::out_of_range("generator index out of range");
        out(g.index, g.index - 1) = RatFunc(1);
        break;
    }
    return out;
}

namespace {

DualWeight negated(DualWeight h) {
    for (auto& c : h) c = -c;
    return h;
}

Matrix<RatFunc> tensor_power(const Matrix<RatFunc>& a, int k) {
    Matrix<RatFunc> out = Matrix<RatFunc>::identity(1);
    for (int i = 0; i < k; ++i) out = kron(out, a);
    return out;
}

} // namespace

Matrix<RatFunc> tensor_action(const Gen& g, int r, const RootDatum& rd) {
    if (r < 1) throw std::invalid_argument("tensor power must be at least 1");
    const SuperDims& dims = rd.dims;
    switch (g.kind) {
    case Gen::Kind::Sigma:
    case Gen::Kind::QWeight:
        return tensor_power(vector_action(g, dims), r);
    case Gen::Kind::E: {
        const int i = g.index;
        const std::size_t pos = static_cast<std::size_t>(i - 1);
        const Matrix<RatFunc> left =
            rd.parity[pos] == 1 ? vector_action(Gen::sigma(), dims)
                                : Matrix<RatFunc>::identity(static_cast<std::size_t>(dims.total()));
        const Matrix<RatFunc> mid = vector_action(g, dims);
        const Matrix<RatFunc> right =
            vector_action(Gen::q_weight(negated(rd.scaled_coroot(i))), dims);
        Matrix<RatFunc> out(tensor_dim(r, dims), tensor_dim(r, dims));
        for (int k = 1; k <= r; ++k)
            out += kron(kron(tensor_power(left, k - 1), mid), tensor_power(right, r - k));
        return out;
    }
    case Gen::Kind::F: {
        const int i = g.index;
        const std::size_t pos = static_cast<std::size_t>(i - 1);
        Matrix<RatFunc> left = vector_action(Gen::q_weight(rd.scaled_coroot(i)), dims);
        if (rd.parity[pos] == 1)
            left = vector_action(Gen::sigma(), dims) * left;
        const Matrix<RatFunc> mid = vector_action(g, dims);
        const Matrix<RatFunc> right = Matrix<RatFunc>::identity(static_cast<std::size_t>(dims.total()));
        Matrix<RatFunc> out(tensor_dim(r, dims), tensor_dim(r, dims));
        for (int k = 1; k <= r; ++k)
            out += kron(kron(tensor_power(left, k - 1), mid), tensor_power(right, r - k));
        return out;
    }
    }
    throw std::logic_error("unreachable");
}

RelationReport check_qsuper_relations(const SuperDims& dims, int r) {
    RelationReport report;
    const RootDatum rd = build_root_datum(dims);
    const std::size_t d = tensor_dim(r, dims);
    const Matrix<RatFunc> id = Matrix<RatFunc>::identity(d);
    const int v = dims.total();

    // generating dual weights +-eps_b
    std::vector<DualWeight> weights;
    for (int b = 1; b <= v; ++b) {
        weights.push_back(rd.eps(b));
        weights.push_back(negated(rd.eps(b)));
    }
    auto q_action = [&](const DualWeight& h) { return tensor_action(Gen::q_weight(h), r, rd); };

    // q^0 = 1
    record_residual(report, "Q1", {}, q_action(DualWeight(static_cast<std::size_t>(v), 0)) - id);

    // multiplicativity over the generating weights
    for (std::size_t a = 0; a < weights.size(); ++a)
        for (std::size_t b = a; b < weights.size(); ++b) {
            DualWeight sum = weights[a];
            for (std::size_t c = 0; c < sum.size(); ++c) sum[c] += weights[b][c];
            record_residual(report, "Q2", {static_cast<int>(a + 1), static_cast<int>(b + 1)},
                            q_action(weights[a]) * q_action(weights[b]) - q_action(sum));
        }

    std::vector<Matrix<RatFunc>> es, fs;
    for (int i = 1; i <= rd.rank(); ++i) {
        es.push_back(tensor_action(Gen::e(i), r, rd));
        fs.push_back(tensor_action(Gen::f(i), r, rd));
    }

    // conjugation of e_i, f_i by q^h
    for (std::size_t a = 0; a < weights.size(); ++a) {
        const Matrix<RatFunc> qa = q_action(weights[a]);
        for (int i = 1; i <= rd.rank(); ++i) {
            const long k = rd.pair_alpha(weights[a], i);
            const auto& e = es[static_cast<std::size_t>(i - 1)];
            const auto& f = fs[static_cast<std::size_t>(i - 1)];
            record_residual(report, "Q3", {static_cast<int>(a + 1), i},
                            qa * e - (e * qa).scaled(RatFunc::q_power(k)));
            record_residual(report, "Q4", {static_cast<int>(a + 1), i},
                            qa * f - (f * qa).scaled(RatFunc::q_power(-k)));
        }
    }

    // supercommutator [e_i, f_j]
    for (int i = 1; i <= rd.rank(); ++i)
        for (int j = 1; j <= rd.rank(); ++j) {
            const auto& e = es[static_cast<std::size_t>(i - 1)];
            const auto& f = fs[static_cast<std::size_t>(j - 1)];
            const int sign = rd.parity[static_cast<std::size_t>(i - 1)] *
                                     rd.parity[static_cast<std::size_t>(j - 1)] ==
                                 1
                                 ? -1
                                 : 1;
            Matrix<RatFunc> lhs = e * f - (f * e).scaled(RatFunc(BigRat(sign)));
            if (i == j) {
                const long ell = rd.ell[static_cast<std::size_t>(i - 1)];
                const RatFunc denom = RatFunc::q_power(ell) - RatFunc::q_power(-ell);
                const DualWeight lh = rd.scaled_coroot(i);
                const Matrix<RatFunc> rhs =
                    (q_action(lh) - q_action(negated(lh))).scaled(RatFunc(1) / denom);
                lhs = lhs - rhs;
            }
            record_residual(report, "Q5", {i, j}, lhs);
        }

    // sigma is an involution conjugating e_i, f_i by the parity sign
    const Matrix<RatFunc> sig = tensor_action(Gen::sigma(), r, rd);
    record_residual(report, "sigma-involution", {}, sig * sig - id);
    for (int i = 1; i <= rd.rank(); ++i) {
        const RatFunc sign(BigRat(rd.parity[static_cast<std::size_t>(i - 1)] == 1 ? -1 : 1));
        record_residual(report, "sigma-e", {i},
                        sig * es[static_cast<std::size_t>(i - 1)] * sig -
                            es[static_cast<std::size_t>(i - 1)].scaled(sign));
        record_residual(report, "sigma-f", {i},
                        sig * fs[static_cast<std::size_t>(i - 1)] * sig -
                            fs[static_cast<std::size_t>(i - 1)].scaled(sign));
    }
    return report;
}

RelationReport check_two_site_tables(const SuperDims& dims) {
    RelationReport report;
    const RootDatum rd = build_root_datum(dims);
    const int v = dims.total();
    const std::size_t d = tensor_dim(2, dims);

    for (int k = 1; k <= rd.rank(); ++k) {
        const int dkm = rd.parity[static_cast<std::size_t>(k - 1)] == 1 ? 1 : 0;

        // e_k case table, columns indexed by the input tensor v_i (x) v_j
        Matrix<RatFunc> etab(d, d);
        for (int i = 1; i <= v; ++i)
            for (int j = 1; j <= v; ++j) {
                const std::size_t col = encode({i, j}, dims);
                if (i == k + 1 && j == k + 1) {
                    etab(encode({i - 1, j}, dims), col) +=
                        RatFunc::q_power(degree(j, dims) == 0 ? 1 : -1);
                    etab(encode({i, j - 1}, dims), col) +=
                        RatFunc(BigRat(degree(i, dims) * dkm == 1 ? -1 : 1));
                } else if (i == k + 1 && j == k) {
                    etab(encode({i - 1, j}, dims), col) +=
                        RatFunc::q_power(degree(j, dims) == 0 ? -1 : 1);
                } else if (i == k + 1) {
                    etab(encode({i - 1, j}, dims), col) += RatFunc(1);
                } else if (j == k + 1) {
                    etab(encode({i, j - 1}, dims), col) +=
                        RatFunc(BigRat(degree(i, dims) * dkm == 1 ? -1 : 1));
                }
            }
        record_residual(report, "two-site-e", {k}, tensor_action(Gen::e(k), 2, rd) - etab);

        // f_k case table
        Matrix<RatFunc> ftab(d, d);
        for (int i = 1; i <= v; ++i)
            for (int j = 1; j <= v; ++j) {
                const std::size_t col = encode({i, j}, dims);
                const RatFunc sign(BigRat(degree(i, dims) * dkm == 1 ? -1 : 1));
                if (i == k && j == k) {
                    ftab(encode({i + 1, j}, dims), col) += RatFunc(1);
                    ftab(encode({i, j + 1}, dims), col) +=
                        sign * RatFunc::q_power(degree(i, dims) == 0 ? 1 : -1);
                } else if (i == k + 1 && j == k) {
                    ftab(encode({i, j + 1}, dims), col) +=
                        sign * RatFunc::q_power(degree(i, dims) == 0 ? -1 : 1);
                } else if (j == k) {
                    ftab(encode({i, j + 1}, dims), col) += sign;
                } else if (i == k) {
                    ftab(encode({i + 1, j}, dims), col) += RatFunc(1);
                }
            }
        record_residual(report, "two-site-f", {k}, tensor_action(Gen::f(k), 2, rd) - ftab);
    }
    return report;
}

} // namespace swdual
