#include "quintic/solutions.hpp"

#include "quintic/recurrence.hpp"
#include "quintic/sympoly.hpp"

namespace quintic {

QuinticTuple family_term(unsigned long n) {
    auto [s_n, s_n1] = seq_pair(n);
    Integer sq_next = s_n1 * s_n1;          // s(n+1)^2
    Integer cross2 = 2 * s_n1 * s_n;        // 2 s(n+1) s(n)
    Integer sq2 = 2 * s_n * s_n;            // 2 s(n)^2
    QuinticTuple t;
    t.a = GaussianInt(sq_next - cross2 - sq2);
    t.b = GaussianInt(cross2, sq_next + sq2);
    t.c = GaussianInt(-cross2, sq_next + sq2);
    t.d = sq_next + cross2 - sq2;
    return t;
}

GaussianTriple family_term_closed(unsigned long n) {
    const BiquadElem i_unit = BiquadElem::i();
    const BiquadElem grow = BiquadElem(QuadElem(2, 1));    // 2 + sqrt3
    const BiquadElem decay = BiquadElem(QuadElem(2, -1));  // 2 - sqrt3
    const BiquadElem grow_n = ring_pow(grow, n);
    const BiquadElem decay_n = ring_pow(decay, n);

    const Integer two_pow_n = Integer(1) << n;
    const long parity = (n % 2 == 0) ? 1 : -1;
    const Rational third(two_pow_n, Integer(3));
    const Rational sixth(two_pow_n, Integer(6));

    const BiquadElem one_plus(QuadElem(1, 1));      // 1 + sqrt3
    const BiquadElem one_minus(QuadElem(1, -1));    // 1 - sqrt3
    const BiquadElem flip_plus(QuadElem(-1, 1));    // -1 + sqrt3
    const BiquadElem three_plus(QuadElem(3, 1));    // 3 + sqrt3
    const BiquadElem three_minus(QuadElem(3, -1));  // 3 - sqrt3

    // Shared by b and c: i * (2^n/6) ((3-sqrt3)(2-sqrt3)^n + (3+sqrt3)(2+sqrt3)^n)
    const BiquadElem imag = i_unit * (sixth * (three_minus * decay_n + three_plus * grow_n));

    BiquadElem a = third * (one_plus * grow_n + one_minus * decay_n + BiquadElem(parity));
    BiquadElem b = sixth * (flip_plus * decay_n - one_plus * grow_n + BiquadElem(2 * parity)) + imag;
    BiquadElem c = sixth * (one_plus * grow_n + one_minus * decay_n - BiquadElem(2 * parity)) + imag;

    return GaussianTriple{as_gaussian_int(a), as_gaussian_int(b), as_gaussian_int(c)};
}

bool offset_collapses(unsigned long n) { return family_term(n).d == neg_two_pow(n); }

namespace {

// comp / 2^n, throwing NotDivisible with diagnostics if the division is
// not exact.
Integer scale_component(unsigned long n, const char* name, const Integer& comp) {
    if (mpz_divisible_2exp_p(comp.get_mpz_t(), n) == 0) {
        Integer residue;
        mpz_tdiv_r_2exp(residue.get_mpz_t(), comp.get_mpz_t(), n);
        throw NotDivisible("scale_solution: n=" + std::to_string(n) + " component " + name +
                           " = " + comp.get_str() + " not divisible by 2^n (residue " +
                           residue.get_str() + ")");
    }
    return comp >> n;
}

}  // namespace

SolutionRecord scale_solution(unsigned long n, const QuinticTuple& t) {
    SolutionRecord rec;
    rec.n = n;
    rec.a = GaussianInt(scale_component(n, "a.re", t.a.re()), scale_component(n, "a.im", t.a.im()));
    rec.b = GaussianInt(scale_component(n, "b.re", t.b.re()), scale_component(n, "b.im", t.b.im()));
    rec.c = GaussianInt(scale_component(n, "c.re", t.c.re()), scale_component(n, "c.im", t.c.im()));
    rec.sign = (n % 2 == 0) ? 1 : -1;
    return rec;
}

bool verify_quintic(const SolutionRecord& rec) {
    GaussianInt lhs = ring_pow(rec.a, kQuinticExponent) + ring_pow(rec.b, kQuinticExponent);
    GaussianInt rhs = ring_pow(rec.c, kQuinticExponent) + GaussianInt(rec.sign);
    return lhs == rhs;
}

}  // namespace quintic
