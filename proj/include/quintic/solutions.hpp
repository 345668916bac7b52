#pragma once

#include <stdexcept>
#include <string>

#include "quintic/rings.hpp"

namespace quintic {

// Thrown by scale_solution() when a component is not divisible by 2^n.
// The divisibility is a theorem, so this firing signals a broken invariant
// upstream; the message carries (n, component, residue) for diagnosis.
struct NotDivisible : std::runtime_error {
    explicit NotDivisible(const std::string& what) : std::runtime_error(what) {}
};

/*
 * One unscaled term of the family: a^5 + b^5 = c^5 + d^5 in Z[i], with
 * a and d real.  d collapses to (-2)^n, which is what makes the scaled
 * family a near-miss of the Fermat quintic.
 */
struct QuinticTuple {
    GaussianInt a, b, c;
    Integer d;
};

// The a, b, c components evaluated from their closed forms in Q(i, sqrt3).
struct GaussianTriple {
    GaussianInt a, b, c;
};

/*
 * One scaled solution: a^5 + b^5 = c^5 + sign with sign = (-1)^n.
 * Structural shape: a is purely real, and c = -conj(b).
 */
struct SolutionRecord {
    unsigned long n = 0;
    GaussianInt a, b, c;
    int sign = 1;
};

// Builds the unscaled term from the recurrence pair (s(n), s(n+1)):
//   a = s(n+1)^2 - 2 s(n+1) s(n) - 2 s(n)^2
//   b = i s(n+1)^2 + 2 s(n+1) s(n) + 2i s(n)^2
//   c = i s(n+1)^2 - 2 s(n+1) s(n) + 2i s(n)^2
//   d = s(n+1)^2 + 2 s(n+1) s(n) - 2 s(n)^2
QuinticTuple family_term(unsigned long n);

// The same a, b, c via the closed forms, evaluated exactly in Q(i, sqrt3);
// the sqrt3 parts must cancel and the rest must be integers.  Always equals
// family_term(n) componentwise (the tests enforce this).
GaussianTriple family_term_closed(unsigned long n);

// d(n) == (-2)^n, the telescoped Cassini value.
bool offset_collapses(unsigned long n);

// Divides every component by 2^n (divisibility asserted, not assumed) and
// attaches sign = (-1)^n.
SolutionRecord scale_solution(unsigned long n, const QuinticTuple& t);

// a^5 + b^5 - c^5 - sign == 0, exactly.
bool verify_quintic(const SolutionRecord& rec);

}  // namespace quintic
