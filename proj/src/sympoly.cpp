#include "quintic/sympoly.hpp"

#include <ostream>
#include <sstream>

namespace quintic {

BiPoly BiPoly::monomial(unsigned long deg_x, unsigned long deg_a, const GaussianInt& coeff) {
    BiPoly p;
    if (!coeff.is_zero()) p.terms_[{deg_x, deg_a}] = coeff;
    return p;
}

GaussianInt BiPoly::coefficient(unsigned long deg_x, unsigned long deg_a) const {
    auto it = terms_.find({deg_x, deg_a});
    return it == terms_.end() ? GaussianInt() : it->second;
}

void BiPoly::add_term(const Key& key, const GaussianInt& coeff) {
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        if (!coeff.is_zero()) terms_.emplace(key, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    BiPoly r = *this;
    for (const auto& [key, coeff] : o.terms_) r.add_term(key, coeff);
    return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
    BiPoly r = *this;
    for (const auto& [key, coeff] : o.terms_) r.add_term(key, -coeff);
    return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
    BiPoly r;
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_)
            r.add_term({k1.first + k2.first, k1.second + k2.second}, c1 * c2);
    return r;
}

GaussianInt BiPoly::eval(const GaussianInt& x, const GaussianInt& a) const {
    GaussianInt acc;
    for (const auto& [key, coeff] : terms_)
        acc += coeff * ring_pow(x, key.first) * ring_pow(a, key.second);
    return acc;
}

BiPoly BiPoly::with_x_negated() const {
    BiPoly r;
    for (const auto& [key, coeff] : terms_)
        r.terms_[key] = (key.first % 2 == 0) ? coeff : -coeff;
    return r;
}

std::string BiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, coeff] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << coeff.to_string() << ")";
        if (key.first > 0) os << "*x^" << key.first;
        if (key.second > 0) os << "*a^" << key.second;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const BiPoly& p) { return os << p.to_string(); }

BiPoly odd_part_in_x(const BiPoly& p) {
    BiPoly r;
    for (const auto& [key, coeff] : p.terms())
        if (key.first % 2 == 1) r = r + BiPoly::monomial(key.first, key.second, coeff);
    return r;
}

namespace {

// x^2 + s*2ax - 2a^2, the real quadratic of the pair; s = +/-1.
BiPoly real_quadratic(long s) {
    return BiPoly::monomial(2, 0, GaussianInt(1)) +
           BiPoly::monomial(1, 1, GaussianInt(2 * s)) +
           BiPoly::monomial(0, 2, GaussianInt(-2));
}

// i x^2 - 2ax + 2i a^2.
BiPoly imag_quadratic() {
    return BiPoly::monomial(2, 0, GaussianInt(0, 1)) +
           BiPoly::monomial(1, 1, GaussianInt(-2)) +
           BiPoly::monomial(0, 2, GaussianInt(0, 2));
}

}  // namespace

BiPoly quintic_sum() {
    return real_quadratic(+1).pow(kQuinticExponent) + imag_quadratic().pow(kQuinticExponent);
}

namespace testing {
BiPoly tampered_quintic_sum() {
    return real_quadratic(-1).pow(kQuinticExponent) + imag_quadratic().pow(kQuinticExponent);
}
}  // namespace testing

bool parametric_identity_holds(const Integer& a, const Integer& x) {
    Integer xx = x * x, aa = a * a, ax = a * x;
    GaussianInt lhs_real(xx + 2 * ax - 2 * aa);
    GaussianInt lhs_imag(Integer(-2 * ax), Integer(xx + 2 * aa));
    GaussianInt rhs_real(xx - 2 * ax - 2 * aa);
    GaussianInt rhs_imag(Integer(2 * ax), Integer(xx + 2 * aa));
    return ring_pow(lhs_real, kQuinticExponent) + ring_pow(lhs_imag, kQuinticExponent) ==
           ring_pow(rhs_real, kQuinticExponent) + ring_pow(rhs_imag, kQuinticExponent);
}

}  // namespace quintic
