#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include "quintic/rings.hpp"

namespace quintic {

// The family is built from fifth powers; the expansion engine itself is
// degree-agnostic, so the exponent is a constant rather than hard-wired.
inline constexpr unsigned long kQuinticExponent = 5;

/*
 * BiPoly: sparse bivariate polynomial in (x, a) over Z[i].  Terms map
 * (deg_x, deg_a) to a Gaussian-integer coefficient; zero coefficients are
 * never stored, so the zero polynomial is the empty map and equality is
 * map equality.
 */
class BiPoly {
public:
    using Key = std::pair<unsigned long, unsigned long>;
    using TermMap = std::map<Key, GaussianInt>;

    BiPoly() = default;

    static BiPoly zero() { return BiPoly(); }
    static BiPoly one() { return monomial(0, 0, GaussianInt(1)); }
    static BiPoly monomial(unsigned long deg_x, unsigned long deg_a, const GaussianInt& coeff);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t monomial_count() const { return terms_.size(); }

    // Zero for absent monomials.
    GaussianInt coefficient(unsigned long deg_x, unsigned long deg_a) const;

    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly pow(unsigned long k) const { return ring_pow(*this, k); }

    GaussianInt eval(const GaussianInt& x, const GaussianInt& a) const;

    // Substitute x -> -x by flipping the sign of odd-deg_x coefficients.
    // A coefficient transform, deliberately independent of the expansion
    // machinery above.
    BiPoly with_x_negated() const;

    bool operator==(const BiPoly& o) const { return terms_ == o.terms_; }

    std::string to_string() const;

private:
    void add_term(const Key& key, const GaussianInt& coeff);

    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const BiPoly& p);

// Sub-polynomial of terms with odd deg_x.  For the quintic sum below this
// must come out empty, which is the expansion proof that the sum is even
// in x.
BiPoly odd_part_in_x(const BiPoly& p);

// (x^2 + 2ax - 2a^2)^5 + (i x^2 - 2ax + 2i a^2)^5, fully expanded.
BiPoly quintic_sum();

// Checks the four-quintic identity at one integer point (a, x), computed
// directly in Z[i] with no polynomial machinery involved:
//   (x^2+2ax-2a^2)^5 + (ix^2-2ax+2ia^2)^5
//     == (x^2-2ax-2a^2)^5 + (ix^2+2ax+2ia^2)^5
bool parametric_identity_holds(const Integer& a, const Integer& x);

namespace testing {
// quintic_sum() with one sign error injected into the first quadratic.
// Exists so mutation tests can confirm the evenness check has teeth.
BiPoly tampered_quintic_sum();
}  // namespace testing

}  // namespace quintic
