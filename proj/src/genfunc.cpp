#include "quintic/genfunc.hpp"

#include <algorithm>

#include "quintic/solutions.hpp"

namespace quintic {

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<GaussianRational> sum(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = at(k) + o.at(k);
    return UniPoly(std::move(sum));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    std::vector<GaussianRational> diff(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t k = 0; k < diff.size(); ++k) diff[k] = at(k) - o.at(k);
    return UniPoly(std::move(diff));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<GaussianRational> prod(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
            prod[j + k] = prod[j + k] + coeffs_[j] * o.coeffs_[k];
    return UniPoly(std::move(prod));
}

RationalGF normalized(const RationalGF& gf) {
    GaussianRational c0 = gf.den.at(0);
    if (c0.is_zero())
        throw ZeroConstantTerm("normalized: denominator constant term is zero");
    if (c0 == GaussianRational::one()) return gf;
    UniPoly inv{GaussianRational::one() / c0};
    return RationalGF{gf.num * inv, gf.den * inv};
}

RationalGF operator+(const RationalGF& lhs, const RationalGF& rhs) {
    return RationalGF{lhs.num * rhs.den + rhs.num * lhs.den, lhs.den * rhs.den};
}

std::vector<GaussianRational> series_coefficients(const RationalGF& gf, std::size_t count) {
    RationalGF g = normalized(gf);
    std::vector<GaussianRational> t;
    t.reserve(count);
    std::size_t den_terms = g.den.term_count();
    for (std::size_t n = 0; n < count; ++n) {
        GaussianRational value = g.num.at(n);
        for (std::size_t k = 1; k < den_terms && k <= n; ++k)
            value = value - g.den.at(k) * t[n - k];
        t.push_back(value);
    }
    return t;
}

namespace {

const GaussianRational kImag(Rational(0), Rational(1));

}  // namespace

// The scaled series live over (1+x)(1-4x+x^2); substituting x := sx with
// s = 2 gives the raw ones.  Denominators and the i-part numerators are
// built by polynomial multiplication rather than stored pre-expanded.
RationalGF builtin_series(Series which) {
    const long s = (which == Series::RawA || which == Series::RawB || which == Series::RawC)
                       ? 2
                       : 1;
    UniPoly linear{GaussianRational(1), GaussianRational(s)};          // 1 + sx
    UniPoly one_minus{GaussianRational(1), GaussianRational(-s)};      // 1 - sx
    UniPoly quadratic{GaussianRational(1), GaussianRational(-4 * s), GaussianRational(s * s)};
    UniPoly imag_num = UniPoly{kImag} * one_minus * linear;            // i (1 - s^2 x^2)
    UniPoly den = linear * quadratic;

    switch (which) {
        case Series::ScaledA:
        case Series::RawA:
            // (1 + s^2 x^2) / den
            return RationalGF{UniPoly{GaussianRational(1), GaussianRational(0),
                                      GaussianRational(s * s)},
                              den};
        case Series::ScaledB:
        case Series::RawB:
            return RationalGF{UniPoly{GaussianRational(0), GaussianRational(-2 * s)} + imag_num,
                              den};
        case Series::ScaledC:
        case Series::RawC:
            return RationalGF{UniPoly{GaussianRational(0), GaussianRational(2 * s)} + imag_num,
                              den};
    }
    throw std::logic_error("builtin_series: bad Series");
}

bool crosscheck_series(Series which, std::size_t count) {
    auto coeffs = series_coefficients(builtin_series(which), count);
    for (std::size_t n = 0; n < count; ++n) {
        if (!coeffs[n].is_gaussian_integer()) return false;
        QuinticTuple raw = family_term(n);
        GaussianInt expected;
        switch (which) {
            case Series::RawA: expected = raw.a; break;
            case Series::RawB: expected = raw.b; break;
            case Series::RawC: expected = raw.c; break;
            default: {
                SolutionRecord rec = scale_solution(n, raw);
                expected = (which == Series::ScaledA) ? rec.a
                           : (which == Series::ScaledB) ? rec.b
                                                        : rec.c;
            }
        }
        if (coeffs[n].to_gaussian_int() != expected) return false;
    }
    return true;
}

}  // namespace quintic
