#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "quintic/rings.hpp"

namespace quintic {

// Thrown by normalized() when the denominator vanishes at 0, i.e. the
// series has no expansion around the origin.
struct ZeroConstantTerm : std::runtime_error {
    explicit ZeroConstantTerm(const std::string& what) : std::runtime_error(what) {}
};

/*
 * UniPoly: dense univariate polynomial over Q(i), coefficients ascending,
 * no trailing zeros (so the zero polynomial has no coefficients at all).
 */
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(std::initializer_list<GaussianRational> coeffs) : coeffs_(coeffs) { trim(); }
    explicit UniPoly(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    bool is_zero() const { return coeffs_.empty(); }
    std::size_t term_count() const { return coeffs_.size(); }  // degree + 1, or 0

    // Zero beyond the stored coefficients.
    GaussianRational at(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : GaussianRational();
    }

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;

    bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<GaussianRational> coeffs_;
};

/*
 * RationalGF: formal power series num/den.  The coefficient stream is
 * well defined whenever den(0) != 0; after normalization den(0) == 1 and
 * the coefficients follow the linear recurrence read off the denominator.
 */
struct RationalGF {
    UniPoly num, den;
};

// Scale num and den so that den(0) == 1; the series is unchanged.
RationalGF normalized(const RationalGF& gf);

// Sum over a common denominator; the coefficient streams add.
RationalGF operator+(const RationalGF& lhs, const RationalGF& rhs);

// First `count` series coefficients, exact: with den = 1 + q1 x + q2 x^2 + ...
// and num = p0 + p1 x + ..., the coefficients satisfy
//   t(n) = p(n) - sum_{k>=1} q(k) t(n-k).
std::vector<GaussianRational> series_coefficients(const RationalGF& gf, std::size_t count);

/*
 * The six built-in generating functions of the family.  The scaled trio
 * generates (a_n, b_n, c_n) with a_n^5 + b_n^5 = c_n^5 + (-1)^n; the raw
 * trio generates the unscaled components, coefficient n larger by 2^n.
 * The b/c series are stored as a single Gaussian-coefficient rational
 * function over the common denominator, e.g.
 *   ScaledB = (-2x + i(1-x)(1+x)) / ((1+x)(1-4x+x^2)).
 */
enum class Series { ScaledA, ScaledB, ScaledC, RawA, RawB, RawC };

RationalGF builtin_series(Series which);

// True iff the first `count` coefficients of the builtin are Gaussian
// integers and agree with the values constructed by the solutions module.
bool crosscheck_series(Series which, std::size_t count);

}  // namespace quintic
