#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quintic/sympoly.hpp"
#include "test_util.hpp"

using namespace quintic;

namespace {

BiPoly rand_poly() {
    BiPoly p;
    int terms = testutil::rand_long(0, 4);
    for (int t = 0; t < terms; ++t)
        p = p + BiPoly::monomial(testutil::rand_long(0, 4), testutil::rand_long(0, 4),
                                 GaussianInt(testutil::rand_long(-9, 9),
                                             testutil::rand_long(-9, 9)));
    return p;
}

}  // namespace

TEST_CASE("binomial square") {
    BiPoly x_plus_a = BiPoly::monomial(1, 0, GaussianInt(1)) + BiPoly::monomial(0, 1, GaussianInt(1));
    BiPoly expected = BiPoly::monomial(2, 0, GaussianInt(1)) +
                      BiPoly::monomial(1, 1, GaussianInt(2)) +
                      BiPoly::monomial(0, 2, GaussianInt(1));
    CHECK(x_plus_a.pow(2) == expected);
}

TEST_CASE("multiplication by zero is zero") {
    CHECK((rand_poly() * BiPoly::zero()).is_zero());
    CHECK(BiPoly::zero().monomial_count() == 0);
}

TEST_CASE("cancelling terms are not stored") {
    BiPoly p = BiPoly::monomial(1, 1, GaussianInt(3));
    BiPoly q = BiPoly::monomial(1, 1, GaussianInt(-3));
    CHECK((p + q).is_zero());
    CHECK((p - p).is_zero());
}

TEST_CASE("first quadratic to the fifth evaluates at (1,1)") {
    BiPoly quad = BiPoly::monomial(2, 0, GaussianInt(1)) +
                  BiPoly::monomial(1, 1, GaussianInt(2)) +
                  BiPoly::monomial(0, 2, GaussianInt(-2));
    // 1 + 2 - 2 = 1, so the fifth power evaluates to 1
    CHECK(quad.pow(5).eval(GaussianInt(1), GaussianInt(1)) == GaussianInt(1));
}

TEST_CASE("quintic sum expansion") {
    BiPoly g = quintic_sum();

    // leading terms of both quintics: 1^5 + i^5
    CHECK(g.coefficient(10, 0) == GaussianInt(1, 1));
    // trailing terms: (-2)^5 + (2i)^5
    CHECK(g.coefficient(0, 10) == GaussianInt(-32, 32));

    // each quadratic factor is homogeneous of degree 2, so g is homogeneous
    // of total degree 10
    for (const auto& [key, coeff] : g.terms()) CHECK(key.first + key.second == 10);

    CHECK(g.eval(GaussianInt(1), GaussianInt(0)) == GaussianInt(1, 1));

    // direct Gaussian arithmetic, no polynomial machinery: at (x,a) = (2,1)
    // the two quadratics are 6 and -4+6i
    GaussianInt direct = ring_pow(GaussianInt(6), 5) + ring_pow(GaussianInt(-4, 6), 5);
    CHECK(g.eval(GaussianInt(2), GaussianInt(1)) == direct);
}

TEST_CASE("odd part in x") {
    CHECK(odd_part_in_x(quintic_sum()).is_zero());

    BiPoly p = BiPoly::monomial(3, 0, GaussianInt(1)) + BiPoly::monomial(2, 0, GaussianInt(1));
    CHECK(odd_part_in_x(p) == BiPoly::monomial(3, 0, GaussianInt(1)));
    CHECK(odd_part_in_x(BiPoly::zero()).is_zero());
}

TEST_CASE("substituting -x fixes the quintic sum") {
    BiPoly g = quintic_sum();
    CHECK((g - g.with_x_negated()).is_zero());
    for (int i = 0; i < 50; ++i) {
        BiPoly p = rand_poly();
        CHECK(p.with_x_negated().with_x_negated() == p);  // involution
    }
}

TEST_CASE("tampered sum is caught") {
    CHECK(!odd_part_in_x(quintic::testing::tampered_quintic_sum()).is_zero());
}

TEST_CASE("evaluation is a ring homomorphism") {
    for (int i = 0; i < 100; ++i) {
        BiPoly p = rand_poly(), q = rand_poly();
        GaussianInt x(testutil::rand_long(-20, 20), testutil::rand_long(-20, 20));
        GaussianInt a(testutil::rand_long(-20, 20), testutil::rand_long(-20, 20));
        CHECK((p * q).eval(x, a) == p.eval(x, a) * q.eval(x, a));
        CHECK((p + q).eval(x, a) == p.eval(x, a) + q.eval(x, a));
    }
}

TEST_CASE("parametric identity at fixed points") {
    CHECK(parametric_identity_holds(Integer(0), Integer(7)));  // a=0: both sides identical
    CHECK(parametric_identity_holds(Integer(1), Integer(2)));
    CHECK(parametric_identity_holds(Integer(-3), Integer(5)));
}

TEST_CASE("parametric identity at random points") {
    for (int i = 0; i < 100; ++i) {
        Integer a(testutil::rand_long(-1000, 1000));
        Integer x(testutil::rand_long(-1000, 1000));
        CHECK(parametric_identity_holds(a, x));
    }
}
