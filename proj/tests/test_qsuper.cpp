#include <doctest.h>

#include "swdual/qsuper.hpp"

using namespace swdual;

namespace {

Matrix<RatFunc> tensor_power(const Matrix<RatFunc>& a, int k) {
    Matrix<RatFunc> out = Matrix<RatFunc>::identity(1);
    for (int i = 0; i < k; ++i) out = kron(out, a);
    return out;
}

} // namespace

TEST_CASE("root datum for (1,1)") {
    const RootDatum rd = build_root_datum({1, 1});
    REQUIRE(rd.rank() == 1);
    CHECK(rd.parity == std::vector<int>{1});
    CHECK(rd.ell == std::vector<int>{1});
    CHECK(rd.coroots[0] == DualWeight{1, 1});
    CHECK(validate_root_datum(rd));
}

TEST_CASE("root datum for (2,1)") {
    const RootDatum rd = build_root_datum({2, 1});
    REQUIRE(rd.rank() == 2);
    CHECK(rd.coroots[0] == DualWeight{1, -1, 0});
    CHECK(rd.coroots[1] == DualWeight{0, 1, 1});
    CHECK(rd.ell == std::vector<int>{1, 1});
    CHECK(rd.parity == std::vector<int>{0, 1});
    CHECK(validate_root_datum(rd));
}

TEST_CASE("root datum for (2,2)") {
    const RootDatum rd = build_root_datum({2, 2});
    REQUIRE(rd.rank() == 3);
    CHECK(rd.ell == std::vector<int>{1, 1, -1});
    CHECK(rd.coroots[2] == DualWeight{0, 0, 1, -1});
    CHECK(rd.parity == std::vector<int>{0, 1, 0});
    CHECK(validate_root_datum(rd));
}

TEST_CASE("degenerate data at n = 0 and m = 0") {
    const RootDatum even = build_root_datum({3, 0});
    CHECK(even.parity == std::vector<int>{0, 0});
    CHECK(even.ell == std::vector<int>{1, 1});
    CHECK(even.coroots[0] == DualWeight{1, -1, 0});
    CHECK(validate_root_datum(even));

    const RootDatum odd = build_root_datum({0, 3});
    CHECK(odd.parity == std::vector<int>{0, 0});
    CHECK(odd.ell == std::vector<int>{-1, -1});
    CHECK(odd.coroots[1] == DualWeight{0, 1, -1});
    CHECK(validate_root_datum(odd));
}

TEST_CASE("vector action matrices") {
    const SuperDims d{1, 1};
    const RootDatum rd = build_root_datum(d);
    const auto sigma = vector_action(Gen::sigma(), d);
    CHECK(sigma(0, 0) == RatFunc(1));
    CHECK(sigma(1, 1) == RatFunc(-1));
    CHECK(sigma(0, 1).is_zero());

    // q^{h_1} with h_1 = eps_1^* + eps_2^* is q times the identity
    const auto qh = vector_action(Gen::q_weight(rd.coroots[0]), d);
    CHECK(qh(0, 0) == RatFunc::variable());
    CHECK(qh(1, 1) == RatFunc::variable());

    const auto e = vector_action(Gen::e(1), d);
    CHECK(e(0, 1) == RatFunc(1));  // v_2 -> v_1
    CHECK(e(0, 0).is_zero());
    CHECK(e(1, 0).is_zero());
    const auto f = vector_action(Gen::f(1), d);
    CHECK(f(1, 0) == RatFunc(1));  // v_1 -> v_2
}

TEST_CASE("tensor action at r = 1 is the vector action") {
    const RootDatum rd = build_root_datum({2, 1});
    for (const Gen& g : {Gen::sigma(), Gen::q_weight(rd.eps(2)), Gen::e(1), Gen::f(2)})
        CHECK(tensor_action(g, 1, rd) == vector_action(g, rd.dims));
}

TEST_CASE("two-site raising action on (1,1)") {
    const SuperDims d{1, 1};
    const RootDatum rd = build_root_datum(d);
    const auto e2 = tensor_action(Gen::e(1), 2, rd);
    // column of the input v_2 (x) v_2: q^-1 v_1 (x) v_2 - v_2 (x) v_1
    const std::size_t in = encode({2, 2}, d);
    CHECK(e2(encode({1, 2}, d), in) == RatFunc::q_power(-1));
    CHECK(e2(encode({2, 1}, d), in) == RatFunc(-1));
    CHECK(e2(encode({1, 1}, d), in).is_zero());
    CHECK(e2(encode({2, 2}, d), in).is_zero());
    // column of the input v_1 (x) v_2: + v_1 (x) v_1
    const std::size_t in2 = encode({1, 2}, d);
    CHECK(e2(encode({1, 1}, d), in2) == RatFunc(1));
}

TEST_CASE("supercommutator identity at r = 1 on (1,1)") {
    const SuperDims d{1, 1};
    const RootDatum rd = build_root_datum(d);
    const auto e = tensor_action(Gen::e(1), 1, rd);
    const auto f = tensor_action(Gen::f(1), 1, rd);
    // parity of the odd generator makes this an anticommutator
    CHECK(e * f + f * e == Matrix<RatFunc>::identity(2));
}

TEST_CASE("defining relations hold on the super side") {
    for (const SuperDims dims :
         {SuperDims{1, 1}, SuperDims{2, 1}, SuperDims{1, 2}, SuperDims{2, 2}, SuperDims{2, 0},
          SuperDims{0, 2}, SuperDims{1, 0}, SuperDims{0, 1}}) {
        for (int r = 1; r <= 4; ++r) {
            if (tensor_dim(r, dims) > 81) continue;
            CHECK(check_qsuper_relations(dims, r).all_zero());
        }
    }
}

TEST_CASE("conjugation weights in the Cartan relations") {
    // <eps_1, alpha_1> = 1 on (2,1): a single explicit instance
    const RootDatum rd = build_root_datum({2, 1});
    CHECK(rd.pair_alpha(rd.eps(1), 1) == 1);
    const auto qh = tensor_action(Gen::q_weight(rd.eps(1)), 2, rd);
    const auto e = tensor_action(Gen::e(1), 2, rd);
    CHECK(qh * e == (e * qh).scaled(RatFunc::variable()));
}

TEST_CASE("two-site case tables match the tensor extension") {
    for (const SuperDims dims :
         {SuperDims{1, 1}, SuperDims{2, 1}, SuperDims{1, 2}, SuperDims{2, 2}, SuperDims{3, 0},
          SuperDims{0, 3}}) {
        CHECK(check_two_site_tables(dims).all_zero());
    }
}

TEST_CASE("tensor action satisfies the twisted Leibniz recursion") {
    for (const SuperDims dims : {SuperDims{1, 1}, SuperDims{2, 1}}) {
        const RootDatum rd = build_root_datum(dims);
        const auto sigma = vector_action(Gen::sigma(), dims);
        const auto id = Matrix<RatFunc>::identity(static_cast<std::size_t>(dims.total()));
        for (int r = 2; r <= 4; ++r) {
            if (tensor_dim(r, dims) > 81) continue;
            for (int i = 1; i <= rd.rank(); ++i) {
                const bool odd = rd.parity[static_cast<std::size_t>(i - 1)] == 1;
                DualWeight lh = rd.scaled_coroot(i);
                DualWeight neg = lh;
                for (auto& c : neg) c = -c;
                const auto head_e = tensor_action(Gen::e(i), r - 1, rd);
                const auto head_sigma = tensor_power(sigma, r - 1);
                CHECK(tensor_action(Gen::e(i), r, rd) ==
                      kron(head_e, vector_action(Gen::q_weight(neg), dims)) +
                          kron(odd ? head_sigma : Matrix<RatFunc>::identity(head_e.rows()),
                               vector_action(Gen::e(i), dims)));
                const auto head_f = tensor_action(Gen::f(i), r - 1, rd);
                auto twist = tensor_action(Gen::q_weight(lh), r - 1, rd);
                if (odd) twist = head_sigma * twist;
                CHECK(tensor_action(Gen::f(i), r, rd) ==
                      kron(head_f, id) + kron(twist, vector_action(Gen::f(i), dims)));
            }
        }
    }
}

TEST_CASE("sigma squares to the identity on every grid point") {
    for (const SuperDims dims : {SuperDims{1, 1}, SuperDims{2, 1}, SuperDims{2, 2}}) {
        const RootDatum rd = build_root_datum(dims);
        for (int r = 1; r <= 3; ++r) {
            const auto s = tensor_action(Gen::sigma(), r, rd);
            CHECK(s * s == Matrix<RatFunc>::identity(tensor_dim(r, dims)));
        }
    }
}
