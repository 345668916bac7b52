#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "quintic/genfunc.hpp"
#include "quintic/solutions.hpp"
#include "test_util.hpp"

using namespace quintic;

namespace {

const GaussianRational kOne(1);
const GaussianRational kImag(0, 1);

RationalGF rand_gf() {
    auto rand_poly = [](int max_terms) {
        std::vector<GaussianRational> c;
        int terms = testutil::rand_long(1, max_terms);
        for (int k = 0; k < terms; ++k) c.push_back(testutil::rand_gaussian_rational());
        return UniPoly(c);
    };
    UniPoly den = rand_poly(4);
    while (den.at(0).is_zero()) den = rand_poly(4);
    return RationalGF{rand_poly(4), den};
}

}  // namespace

TEST_CASE("unipoly trims trailing zeros") {
    UniPoly p{kOne, GaussianRational(), GaussianRational()};
    CHECK(p.term_count() == 1);
    CHECK(UniPoly{GaussianRational()}.is_zero());
    CHECK((UniPoly{kOne, kImag} - UniPoly{kOne, kImag}).is_zero());
}

TEST_CASE("normalization") {
    // already normalized: unchanged
    RationalGF a = builtin_series(Series::ScaledA);
    CHECK(normalized(a).num == a.num);
    CHECK(normalized(a).den == a.den);

    // 1/(2+2x) -> (1/2)/(1+x)
    RationalGF g{UniPoly{kOne}, UniPoly{GaussianRational(2), GaussianRational(2)}};
    RationalGF n = normalized(g);
    CHECK(n.num == UniPoly{GaussianRational(Rational(1, 2))});
    CHECK(n.den == UniPoly{kOne, kOne});

    RationalGF bad{UniPoly{kOne}, UniPoly{GaussianRational(), kOne}};
    CHECK_THROWS_AS(normalized(bad), ZeroConstantTerm);
}

TEST_CASE("geometric series") {
    RationalGF g{UniPoly{kOne}, UniPoly{kOne, GaussianRational(-1)}};
    auto c = series_coefficients(g, 4);
    for (const auto& t : c) CHECK(t == kOne);
}

TEST_CASE("built-in numerators and denominators") {
    RationalGF a = builtin_series(Series::ScaledA);
    CHECK(a.num == UniPoly{kOne, GaussianRational(), kOne});  // 1 + x^2
    // (1+x)(1-4x+x^2) = 1 - 3x - 3x^2 + x^3
    CHECK(a.den == UniPoly{kOne, GaussianRational(-3), GaussianRational(-3), kOne});

    CHECK(builtin_series(Series::ScaledB).num.at(0) == kImag);  // reproduces b_0 = i
    CHECK(builtin_series(Series::ScaledC).num.at(0) == kImag);

    RationalGF araw = builtin_series(Series::RawA);
    CHECK(araw.num == UniPoly{kOne, GaussianRational(), GaussianRational(4)});
    CHECK(araw.den ==
          UniPoly{kOne, GaussianRational(-6), GaussianRational(-12), GaussianRational(8)});
}

TEST_CASE("scaled series open with the hand-checkable values") {
    auto a = series_coefficients(builtin_series(Series::ScaledA), 4);
    CHECK(a[0] == kOne);
    CHECK(a[1] == GaussianRational(3));
    CHECK(a[2] == GaussianRational(13));
    CHECK(a[3] == GaussianRational(47));

    auto b = series_coefficients(builtin_series(Series::ScaledB), 3);
    CHECK(b[0] == kImag);
    CHECK(b[1] == GaussianRational(-2, 3));
    CHECK(b[2] == GaussianRational(-6, 11));

    auto c = series_coefficients(builtin_series(Series::ScaledC), 2);
    CHECK(c[0] == kImag);
    CHECK(c[1] == GaussianRational(2, 3));

    auto araw = series_coefficients(builtin_series(Series::RawA), 3);
    CHECK(araw[0] == kOne);
    CHECK(araw[1] == GaussianRational(6));
    CHECK(araw[2] == GaussianRational(52));
}

TEST_CASE("crosschecks against the solutions module") {
    for (Series s : {Series::ScaledA, Series::ScaledB, Series::ScaledC, Series::RawA,
                     Series::RawB, Series::RawC})
        CHECK(crosscheck_series(s, 100));
}

TEST_CASE("raw coefficients are 2^n times scaled ones") {
    auto pairs = {std::pair{Series::ScaledA, Series::RawA},
                  std::pair{Series::ScaledB, Series::RawB},
                  std::pair{Series::ScaledC, Series::RawC}};
    for (auto [scaled, raw] : pairs) {
        auto s = series_coefficients(builtin_series(scaled), 60);
        auto r = series_coefficients(builtin_series(raw), 60);
        GaussianRational pow2 = kOne;
        for (std::size_t n = 0; n < 60; ++n) {
            CHECK(r[n] == pow2 * s[n]);
            pow2 = pow2 * GaussianRational(2);
        }
    }
}

TEST_CASE("the b and c series split as real part plus i times a real series") {
    // the single-fraction builtins must equal the two-fraction split form
    UniPoly common{kOne, GaussianRational(-3), GaussianRational(-3), kOne};
    UniPoly quad{kOne, GaussianRational(-4), kOne};
    RationalGF real_part{UniPoly{GaussianRational(), GaussianRational(-2)}, common};
    RationalGF imag_part{UniPoly{kImag} * UniPoly{kOne, GaussianRational(-1)}, quad};

    auto split = series_coefficients(real_part + imag_part, 30);
    auto builtin = series_coefficients(builtin_series(Series::ScaledB), 30);
    for (std::size_t n = 0; n < 30; ++n) CHECK(split[n] == builtin[n]);
}

TEST_CASE("coefficient extraction is linear") {
    for (int i = 0; i < 40; ++i) {
        RationalGF f = rand_gf(), g = rand_gf();
        auto sum = series_coefficients(f + g, 12);
        auto cf = series_coefficients(f, 12);
        auto cg = series_coefficients(g, 12);
        for (std::size_t n = 0; n < 12; ++n) CHECK(sum[n] == cf[n] + cg[n]);
    }
}

TEST_CASE("truncated series times denominator gives back the numerator") {
    for (int i = 0; i < 40; ++i) {
        RationalGF f = normalized(rand_gf());
        const std::size_t count = 12;
        auto coeffs = series_coefficients(f, count);
        UniPoly truncated(coeffs);
        UniPoly product = truncated * f.den;
        for (std::size_t k = 0; k < count; ++k) CHECK(product.at(k) == f.num.at(k));
    }
}

TEST_CASE("induced recurrences") {
    // full records satisfy t(n) = 3t(n-1) + 3t(n-2) - t(n-3) componentwise
    std::vector<SolutionRecord> recs;
    for (unsigned long n = 0; n < 100; ++n) recs.push_back(scale_solution(n, family_term(n)));

    auto holds_order3 = [&](auto pick) {
        for (std::size_t n = 3; n < recs.size(); ++n) {
            GaussianInt expect = GaussianInt(3) * pick(recs[n - 1]) +
                                 GaussianInt(3) * pick(recs[n - 2]) - pick(recs[n - 3]);
            if (!(pick(recs[n]) == expect)) return false;
        }
        return true;
    };
    CHECK(holds_order3([](const SolutionRecord& r) { return r.a; }));
    CHECK(holds_order3([](const SolutionRecord& r) { return r.b; }));
    CHECK(holds_order3([](const SolutionRecord& r) { return r.c; }));

    // imaginary parts satisfy the order-2 recurrence t(n) = 4t(n-1) - t(n-2),
    // opening 1, 3, 11, 41
    CHECK(recs[0].b.im() == 1);
    CHECK(recs[1].b.im() == 3);
    CHECK(recs[2].b.im() == 11);
    CHECK(recs[3].b.im() == 41);
    for (std::size_t n = 2; n < recs.size(); ++n) {
        CHECK(recs[n].b.im() == 4 * recs[n - 1].b.im() - recs[n - 2].b.im());
        CHECK(recs[n].c.im() == 4 * recs[n - 1].c.im() - recs[n - 2].c.im());
    }
}
