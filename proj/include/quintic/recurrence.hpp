#pragma once

#include <utility>

#include "quintic/rings.hpp"

namespace quintic {

/*
 * The integer sequence driving the whole family:
 *     s(0) = 0,  s(1) = 1,  s(n+2) = -2 s(n+1) + 2 s(n)
 * i.e. 0, 1, -2, 6, -16, 44, -120, ...
 *
 * The iterative evaluation is definitional and serves as the ground-truth
 * oracle; the closed forms below are verified against it, never the other
 * way around.
 */
struct SeqState {
    unsigned long index = 0;
    Integer value;   // s(index)
    Integer next;    // s(index + 1)

    static SeqState seed() { return SeqState{0, Integer(0), Integer(1)}; }

    void advance() {
        Integer stepped = -2 * next + 2 * value;
        value = next;
        next = stepped;
        ++index;
    }
};

// s(n) by iteration from the seed.
Integer seq_term(unsigned long n);

// (s(n), s(n+1)).
std::pair<Integer, Integer> seq_pair(unsigned long n);

// s(n) via the closed form (sqrt3/6)((-1+sqrt3)^n - (-1-sqrt3)^n),
// evaluated exactly in Q(sqrt3).  NotIntegral here means an arithmetic bug.
Integer seq_term_closed(unsigned long n);

// The three product closed forms, all exact in Q(sqrt3):
//   NextSquared: s(n+1)^2
//   Adjacent:    s(n+1) s(n)
//   Skip:        s(n+2) s(n)
enum class ProductForm { NextSquared, Adjacent, Skip };

Integer product_closed(unsigned long n, ProductForm which);

// The Cassini-style determinant identity s(n+1)^2 - s(n) s(n+2) = (-2)^n,
// with every term computed by iteration.
bool cassini_identity_holds(unsigned long n);

}  // namespace quintic
