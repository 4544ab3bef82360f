#include <doctest.h>

#include <random>

#include "envelkit/linalg.hpp"

using namespace envelkit;

TEST_SUITE_BEGIN("linalg");

namespace {
const FieldTag Q = FieldTag::rationals();
Scalar q(long n, long d = 1) { return Scalar(Q, mpq_class(n, d)); }
Vec v(std::initializer_list<long> xs) {
    Vec out;
    for (long x : xs) out.push_back(q(x));
    return out;
}
} // namespace

TEST_CASE("rref produces canonical reduced echelon form") {
    Mat m = {v({2, 4, 6}), v({1, 2, 3}), v({0, 0, 5})};
    auto pivots = rref(m);
    CHECK(pivots == std::vector<std::size_t>{0, 2});
    CHECK(m.size() == 2);
    CHECK(m[0] == v({1, 2, 0}));
    CHECK(m[1] == v({0, 0, 1}));
}

TEST_CASE("nullspace and solve") {
    Mat a = {v({1, 2, 3}), v({2, 4, 6})};
    Mat ker = nullspace(a);
    CHECK(ker.size() == 2);
    for (const auto& x : ker) CHECK(is_zero_vec(mat_vec(a, x)));

    auto x = solve(Mat{v({1, 1}), v({1, -1})}, v({3, 1}));
    REQUIRE(x);
    CHECK(*x == v({2, 1}));
    CHECK_FALSE(solve(Mat{v({1, 1}), v({2, 2})}, v({1, 3})));
}

TEST_CASE("matrix inverse") {
    Mat a = {v({1, 2}), v({3, 5})};
    auto inv = mat_inverse(a);
    REQUIRE(inv);
    CHECK(mat_mul(a, *inv) == identity_mat(2, Q));
    CHECK_FALSE(mat_inverse(Mat{v({1, 2}), v({2, 4})}));
}

TEST_CASE("subspace membership, sum, intersection") {
    Subspace U = Subspace::span(3, Q, {v({1, 0, 1}), v({0, 1, 0})});
    CHECK(U.dim() == 2);
    CHECK(U.contains(v({2, 3, 2})));
    CHECK_FALSE(U.contains(v({1, 0, 0})));

    Subspace V = Subspace::span(3, Q, {v({0, 0, 1})});
    Subspace S = U.sum(V);
    CHECK(S.dim() == 3);
    CHECK(S == Subspace::full(3, Q));

    Subspace W = Subspace::span(3, Q, {v({1, 0, 1}), v({0, 0, 1})});
    Subspace I = U.intersect(W);
    CHECK(I.dim() == 1);
    CHECK(I.contains(v({1, 0, 1})));
}

TEST_CASE("subspace representation is canonical") {
    Subspace a = Subspace::span(3, Q, {v({1, 1, 0}), v({0, 1, 1})});
    Subspace b = Subspace::span(3, Q, {v({2, 2, 0}), v({1, 2, 1}), v({1, 0, -1})});
    CHECK(a == b);
    CHECK(a.str() == b.str());
}

TEST_CASE("randomized subspace laws") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> coef(-4, 4);
    auto rand_space = [&](std::size_t n) {
        std::vector<Vec> gens;
        std::uniform_int_distribution<std::size_t> cnt(0, 3);
        std::size_t c = cnt(rng);
        for (std::size_t i = 0; i < c; ++i) {
            Vec g;
            for (std::size_t j = 0; j < n; ++j) g.push_back(q(coef(rng)));
            gens.push_back(g);
        }
        return Subspace::span(n, Q, gens);
    };
    for (int iter = 0; iter < 100; ++iter) {
        Subspace a = rand_space(4), b = rand_space(4);
        Subspace i = a.intersect(b), s = a.sum(b);
        CHECK(a.contains(i));
        CHECK(b.contains(i));
        CHECK(s.contains(a));
        CHECK(s.contains(b));
        // modular law of dimensions
        CHECK(s.dim() + i.dim() == a.dim() + b.dim());
    }
}

TEST_SUITE_END();
