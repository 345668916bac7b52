#include "quintic/recurrence.hpp"

namespace quintic {

Integer seq_term(unsigned long n) { return seq_pair(n).first; }

std::pair<Integer, Integer> seq_pair(unsigned long n) {
    SeqState s = SeqState::seed();
    while (s.index < n) s.advance();
    return {s.value, s.next};
}

namespace {

const QuadElem kRootPos(-1, 1);   // -1 + sqrt3
const QuadElem kRootNeg(-1, -1);  // -1 - sqrt3

}  // namespace

Integer seq_term_closed(unsigned long n) {
    QuadElem scale(Rational(0), Rational(1, 6));  // sqrt3 / 6
    QuadElem value = scale * (ring_pow(kRootPos, n) - ring_pow(kRootNeg, n));
    return as_integer(value);
}

Integer product_closed(unsigned long n, ProductForm which) {
    const QuadElem two_plus(2, 1), two_minus(2, -1);
    const Integer two_pow_n = Integer(1) << n;
    const long parity = (n % 2 == 0) ? 1 : -1;

    switch (which) {
        case ProductForm::NextSquared: {
            QuadElem sum = ring_pow(two_plus, n + 1) + ring_pow(two_minus, n + 1) +
                           QuadElem(2 * parity);
            return as_integer(Rational(two_pow_n, Integer(6)) * sum);
        }
        case ProductForm::Adjacent: {
            QuadElem sum = ring_pow(kRootPos, 2 * n + 1) + ring_pow(kRootNeg, 2 * n + 1) -
                           QuadElem(Rational(neg_two_pow(n + 1)));
            return as_integer(Rational(1, 12) * sum);
        }
        case ProductForm::Skip: {
            QuadElem sum = ring_pow(two_plus, n + 1) + ring_pow(two_minus, n + 1) +
                           QuadElem(-4 * parity);
            return as_integer(Rational(two_pow_n, Integer(6)) * sum);
        }
    }
    throw std::logic_error("product_closed: bad ProductForm");
}

bool cassini_identity_holds(unsigned long n) {
    SeqState s = SeqState::seed();
    while (s.index < n) s.advance();
    Integer s_n = s.value, s_n1 = s.next;
    s.advance();
    Integer s_n2 = s.next;
    return s_n1 * s_n1 - s_n * s_n2 == neg_two_pow(n);
}

}  // namespace quintic
