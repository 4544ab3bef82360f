#include <doctest.h>

#include "envelkit/poly.hpp"

using namespace envelkit;

TEST_SUITE_BEGIN("poly");

namespace {
const FieldTag Q = FieldTag::rationals();
Scalar q(long n, long d = 1) { return Scalar(Q, mpq_class(n, d)); }
UPoly up(std::initializer_list<long> cs) {
    std::vector<Scalar> v;
    for (long c : cs) v.push_back(q(c));
    return UPoly(Q, v);
}
} // namespace

TEST_CASE("upoly arithmetic and printing") {
    UPoly f = up({0, -2, 0, 1}); // x^3 - 2x
    CHECK(f.str() == "x^3 - 2*x");
    CHECK(up({-1, 0, 1}).str() == "x^2 - 1");
    CHECK(up({0, 1}).str() == "x");
    CHECK(up({2}).str() == "2");
    CHECK((f * up({0, 1})).degree() == 4);
    auto [quot, rem] = f.divmod(up({0, 1}));
    CHECK(rem.is_zero());
    CHECK(quot == up({-2, 0, 1}));
    CHECK(f.eval(q(2)) == q(4));
}

TEST_CASE("upoly on matrices") {
    Mat m = {{q(0), q(3)}, {q(1), q(0)}};
    UPoly f = up({0, -3, 0, 1}); // x^3 - 3x annihilates (0 3; 1 0)
    CHECK(is_zero_mat(f.eval(m)));
    UPoly g = up({0, 0, 1});
    CHECK(g.eval(m) == Mat{{q(3), q(0)}, {q(0), q(3)}});
}

TEST_CASE("factor signatures over Q") {
    CHECK(rational_factor_signature(up({0, -1, 0, 1})) ==
          FactorSignature{{1, 1}, {1, 1}, {1, 1}}); // x(x-1)(x+1)
    CHECK(rational_factor_signature(up({0, -2, 0, 1})) ==
          FactorSignature{{1, 1}, {2, 1}}); // x(x^2-2)
    CHECK(rational_factor_signature(up({0, 0, 1})) == FactorSignature{{1, 2}}); // x^2
    CHECK(rational_factor_signature(up({0, -1, 1})) == FactorSignature{{1, 1}, {1, 1}});
    CHECK(rational_factor_signature(up({0, -1, -1, 0, 1})) ==
          FactorSignature{{1, 1}, {3, 1}}); // x(x^3 - x - 1)
    CHECK(signature_str(rational_factor_signature(up({0, -2, 0, 1}))) == "{(1,1),(2,1)}");
}

TEST_CASE("cubic quotient comparison") {
    CHECK(cubic_quotient_isomorphic(q(1), q(4)));
    CHECK_FALSE(cubic_quotient_isomorphic(q(1), q(2)));
    CHECK(cubic_quotient_isomorphic(q(2), q(8)));
}

TEST_CASE("mpoly arithmetic and exact division") {
    MPoly x = MPoly::variable(3, 0), y = MPoly::variable(3, 1);
    MPoly p = (x + y) * (x - y);
    MPoly q1 = p.divide_exact(x + y);
    CHECK(q1 == x - y);
    CHECK_THROWS_AS(p.divide_exact(x), PreconditionError);
    CHECK(p.str() == "t1^2 - t2^2");
    CHECK((x * x + MPoly::constant(3, 2)).eval({3, 0, 0}) == mpq_class(11));
}

TEST_CASE("symbolic kernel on a singular parametric matrix") {
    // rows scaled copies: [t1 t2; 2t1 2t2] has rank 1, kernel (-t2, t1)
    std::size_t n = 2;
    MPoly t1 = MPoly::variable(n, 0), t2 = MPoly::variable(n, 1);
    std::vector<std::vector<MPoly>> a = {{t1, t2},
                                         {t1 + t1, t2 + t2}};
    auto res = symbolic_kernel(a);
    CHECK(res.rank == 1);
    REQUIRE(res.kernel.size() == 1);
    // kernel row is a polynomial multiple of (-t2, t1); verified internally
}

TEST_CASE("symbolic kernel of a generic invertible matrix is empty") {
    std::size_t n = 1;
    MPoly t = MPoly::variable(n, 0);
    std::vector<std::vector<MPoly>> a = {{t, MPoly::constant(n, 1)},
                                         {MPoly::constant(n, 1), t}};
    auto res = symbolic_kernel(a);
    CHECK(res.rank == 2);
    CHECK(res.kernel.empty());
}

TEST_SUITE_END();
