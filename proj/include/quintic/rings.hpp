#pragma once

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>

namespace quintic {

using Integer = mpz_class;

// Thrown by as_integer()/as_gaussian_int() when an element that should
// collapse to an integer still carries a fractional or irrational part.
// Every identity in this library is exact, so this firing means an
// identity upstream is broken; tests treat it as a hard failure.
struct NotIntegral : std::runtime_error {
    explicit NotIntegral(const std::string& what) : std::runtime_error(what) {}
};

// (-2)^k as an exact integer.
inline Integer neg_two_pow(unsigned long k) {
    Integer p = Integer(1) << k;
    return (k % 2 == 0) ? p : Integer(-p);
}

/*
 * Rational: exact fraction, always canonical: gcd(|num|, den) = 1 and
 * den >= 1.  den == 1 makes the value recognizable as an integer, which
 * the closed-form evaluations rely on.
 */
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    Integer num() const { return v_.get_num(); }
    Integer den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    static Rational one() { return Rational(1); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(v_ / o.v_));
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }

    std::string to_string() const { return v_.get_str(); }

private:
    explicit Rational(const mpq_class& v) : v_(v) {}  // arithmetic results are canonical
    mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

// The exact integer value of a rational; NotIntegral if den != 1.
inline Integer as_integer(const Rational& r) {
    if (!r.is_integer())
        throw NotIntegral("as_integer: " + r.to_string() + " is not an integer");
    return r.num();
}

/*
 * GaussianInt: element of Z[i].  Closed under add/sub/mul/pow, never rounds.
 */
class GaussianInt {
public:
    GaussianInt() : re_(0), im_(0) {}
    GaussianInt(long re) : re_(re), im_(0) {}
    GaussianInt(const Integer& re) : re_(re), im_(0) {}
    GaussianInt(const Integer& re, const Integer& im) : re_(re), im_(im) {}
    GaussianInt(long re, long im) : re_(re), im_(im) {}

    const Integer& re() const { return re_; }
    const Integer& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    static GaussianInt one() { return GaussianInt(1); }
    static GaussianInt i() { return GaussianInt(0, 1); }

    GaussianInt conjugate() const { return GaussianInt(re_, Integer(-im_)); }

    GaussianInt operator-() const { return GaussianInt(Integer(-re_), Integer(-im_)); }
    GaussianInt operator+(const GaussianInt& o) const {
        return GaussianInt(Integer(re_ + o.re_), Integer(im_ + o.im_));
    }
    GaussianInt operator-(const GaussianInt& o) const {
        return GaussianInt(Integer(re_ - o.re_), Integer(im_ - o.im_));
    }
    GaussianInt operator*(const GaussianInt& o) const {
        return GaussianInt(Integer(re_ * o.re_ - im_ * o.im_),
                           Integer(re_ * o.im_ + im_ * o.re_));
    }
    GaussianInt& operator+=(const GaussianInt& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }

    bool operator==(const GaussianInt& o) const { return re_ == o.re_ && im_ == o.im_; }

    // "0", "3", "-i", "2+3i", "-2+3i", "122-597i"
    std::string to_string() const {
        if (im_ == 0) return re_.get_str();
        std::string imag;
        if (im_ == 1) imag = "i";
        else if (im_ == -1) imag = "-i";
        else imag = im_.get_str() + "i";
        if (re_ == 0) return imag;
        return (im_ > 0) ? re_.get_str() + "+" + imag : re_.get_str() + imag;
    }

private:
    Integer re_, im_;
};

inline std::ostream& operator<<(std::ostream& os, const GaussianInt& z) {
    return os << z.to_string();
}

/*
 * GaussianRational: element of Q(i), canonical component-wise.  Used as the
 * coefficient field of generating-function series before integrality of the
 * coefficients is asserted.
 */
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long re) : re_(re) {}
    GaussianRational(const Rational& re) : re_(re) {}
    GaussianRational(const Rational& re, const Rational& im) : re_(re), im_(im) {}
    GaussianRational(long re, long im) : re_(re), im_(im) {}
    GaussianRational(const GaussianInt& z) : re_(z.re()), im_(z.im()) {}

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_gaussian_integer() const { return re_.is_integer() && im_.is_integer(); }

    static GaussianRational one() { return GaussianRational(1); }

    GaussianInt to_gaussian_int() const {
        if (!is_gaussian_integer())
            throw NotIntegral("to_gaussian_int: " + to_string() + " is not a Gaussian integer");
        return GaussianInt(re_.num(), im_.num());
    }

    GaussianRational operator-() const { return GaussianRational(-re_, -im_); }
    GaussianRational operator+(const GaussianRational& o) const {
        return GaussianRational(re_ + o.re_, im_ + o.im_);
    }
    GaussianRational operator-(const GaussianRational& o) const {
        return GaussianRational(re_ - o.re_, im_ - o.im_);
    }
    GaussianRational operator*(const GaussianRational& o) const {
        return GaussianRational(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
    }
    GaussianRational operator/(const GaussianRational& o) const {
        Rational n = o.re_ * o.re_ + o.im_ * o.im_;
        if (n.is_zero()) throw std::domain_error("GaussianRational: division by zero");
        return GaussianRational((re_ * o.re_ + im_ * o.im_) / n,
                                (im_ * o.re_ - re_ * o.im_) / n);
    }

    bool operator==(const GaussianRational& o) const { return re_ == o.re_ && im_ == o.im_; }

    std::string to_string() const {
        if (im_.is_zero()) return re_.to_string();
        std::string imag = im_ == Rational(1)    ? "i"
                           : im_ == Rational(-1) ? "-i"
                                                 : im_.to_string() + "i";
        if (re_.is_zero()) return imag;
        return (im_.num() > 0) ? re_.to_string() + "+" + imag : re_.to_string() + imag;
    }

private:
    Rational re_, im_;
};

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << z.to_string();
}

/*
 * QuadElem: element of Q(sqrt 3), stored as rational + root3 coefficient.
 * Multiplication follows (u + v r)(u' + v' r) = (uu' + 3vv') + (uv' + vu') r
 * with r^2 = 3.  Conjugation negates the root3 part and is a ring
 * homomorphism, which the tests check.
 */
class QuadElem {
public:
    QuadElem() = default;
    QuadElem(long rational) : u_(rational) {}
    QuadElem(const Rational& rational) : u_(rational) {}
    QuadElem(const Rational& rational, const Rational& root3) : u_(rational), v_(root3) {}
    QuadElem(long rational, long root3) : u_(rational), v_(root3) {}

    const Rational& rational_part() const { return u_; }
    const Rational& root3_part() const { return v_; }

    static QuadElem one() { return QuadElem(1); }

    QuadElem conjugate() const { return QuadElem(u_, -v_); }

    QuadElem operator-() const { return QuadElem(-u_, -v_); }
    QuadElem operator+(const QuadElem& o) const { return QuadElem(u_ + o.u_, v_ + o.v_); }
    QuadElem operator-(const QuadElem& o) const { return QuadElem(u_ - o.u_, v_ - o.v_); }
    QuadElem operator*(const QuadElem& o) const {
        return QuadElem(u_ * o.u_ + Rational(3) * v_ * o.v_, u_ * o.v_ + v_ * o.u_);
    }

    bool operator==(const QuadElem& o) const { return u_ == o.u_ && v_ == o.v_; }

    std::string to_string() const {
        return "(" + u_.to_string() + " + " + v_.to_string() + "*sqrt3)";
    }

private:
    Rational u_, v_;
};

inline QuadElem operator*(const Rational& s, const QuadElem& x) {
    return QuadElem(s, Rational(0)) * x;
}

inline std::ostream& operator<<(std::ostream& os, const QuadElem& x) {
    return os << x.to_string();
}

inline Integer as_integer(const QuadElem& x) {
    if (!x.root3_part().is_zero())
        throw NotIntegral("as_integer: " + x.to_string() + " has a nonzero sqrt3 part");
    return as_integer(x.rational_part());
}

/*
 * BiquadElem: element of Q(i, sqrt 3), coefficients of the basis
 * 1, sqrt3, i, i*sqrt3.  Multiplication table: r^2 = 3, i^2 = -1,
 * (i r)^2 = -3, r * ir = 3i, i * ir = -r.  Setting the two i-coefficients
 * to zero embeds QuadElem, and the embedding commutes with the ring ops.
 */
class BiquadElem {
public:
    BiquadElem() = default;
    BiquadElem(long c) : c00_(c) {}
    BiquadElem(const Rational& c00, const Rational& c01, const Rational& c10,
               const Rational& c11)
        : c00_(c00), c01_(c01), c10_(c10), c11_(c11) {}
    BiquadElem(const QuadElem& q) : c00_(q.rational_part()), c01_(q.root3_part()) {}

    const Rational& unit_part() const { return c00_; }
    const Rational& root3_part() const { return c01_; }
    const Rational& i_part() const { return c10_; }
    const Rational& i_root3_part() const { return c11_; }

    static BiquadElem one() { return BiquadElem(1); }
    static BiquadElem i() { return BiquadElem(Rational(0), Rational(0), Rational(1), Rational(0)); }

    BiquadElem operator-() const { return BiquadElem(-c00_, -c01_, -c10_, -c11_); }
    BiquadElem operator+(const BiquadElem& o) const {
        return BiquadElem(c00_ + o.c00_, c01_ + o.c01_, c10_ + o.c10_, c11_ + o.c11_);
    }
    BiquadElem operator-(const BiquadElem& o) const {
        return BiquadElem(c00_ - o.c00_, c01_ - o.c01_, c10_ - o.c10_, c11_ - o.c11_);
    }
    BiquadElem operator*(const BiquadElem& o) const {
        const Rational three(3);
        return BiquadElem(
            c00_ * o.c00_ + three * c01_ * o.c01_ - c10_ * o.c10_ - three * c11_ * o.c11_,
            c00_ * o.c01_ + c01_ * o.c00_ - c10_ * o.c11_ - c11_ * o.c10_,
            c00_ * o.c10_ + c10_ * o.c00_ + three * (c01_ * o.c11_ + c11_ * o.c01_),
            c00_ * o.c11_ + c11_ * o.c00_ + c01_ * o.c10_ + c10_ * o.c01_);
    }

    bool operator==(const BiquadElem& o) const {
        return c00_ == o.c00_ && c01_ == o.c01_ && c10_ == o.c10_ && c11_ == o.c11_;
    }

    std::string to_string() const {
        return "(" + c00_.to_string() + " + " + c01_.to_string() + "*sqrt3 + " +
               c10_.to_string() + "*i + " + c11_.to_string() + "*i*sqrt3)";
    }

private:
    Rational c00_, c01_, c10_, c11_;
};

inline BiquadElem operator*(const Rational& s, const BiquadElem& x) {
    return BiquadElem(s, Rational(0), Rational(0), Rational(0)) * x;
}

inline std::ostream& operator<<(std::ostream& os, const BiquadElem& x) {
    return os << x.to_string();
}

// Collapse to a Gaussian integer: both sqrt3 coefficients must vanish and
// the remaining two must be integers.
inline GaussianInt as_gaussian_int(const BiquadElem& x) {
    if (!x.root3_part().is_zero() || !x.i_root3_part().is_zero())
        throw NotIntegral("as_gaussian_int: " + x.to_string() + " has a nonzero sqrt3 part");
    if (!x.unit_part().is_integer() || !x.i_part().is_integer())
        throw NotIntegral("as_gaussian_int: " + x.to_string() + " has fractional components");
    return GaussianInt(x.unit_part().num(), x.i_part().num());
}

// Exact x^k by repeated squaring; x^0 is the multiplicative identity.
// Defined uniformly for every ring type above (and for BiPoly).
template <typename R>
R ring_pow(R base, unsigned long k) {
    R acc = R::one();
    while (k > 0) {
        if (k & 1UL) acc = acc * base;
        k >>= 1UL;
        if (k > 0) base = base * base;
    }
    return acc;
}

}  // namespace quintic
