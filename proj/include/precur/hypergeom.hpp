#pragma once

#include "precur/rational.hpp"
#include "precur/recurrence.hpp"

#include <cassert>
#include <stdexcept>

namespace precur {

struct GaussParams {
    Rational alpha, beta;
    long k = 1; // lower parameter is alpha + k
};

/// Algebraicity of 2F1([alpha, beta], [alpha + k]; x), k integral.
/// Algebraic iff k <= 0 or one of the six interlacing conditions below holds.
/// Throughout, the naturals include 0.
inline bool gauss_2f1_algebraic(const GaussParams& p) {
    if (p.k <= 0) return true;
    const Rational& a = p.alpha;
    const Rational& b = p.beta;
    const Rational k(p.k);
    const bool ai = is_integer(a), bi = is_integer(b);
    if (ai && !bi) return true;                                   // 1
    if (!ai && is_nonpositive_integer(b)) return true;            // 2
    if (!ai && !bi && is_natural(b - a - k)) return true;         // 3
    if (ai && bi && a < b && b <= 0 && b - a >= k) return true;   // 4
    if (ai && bi && 0 < a && a < b && b - a >= k) return true;    // 5
    if (ai && bi && b <= 0 && 0 < a) return true;                 // 6
    return false;
}

/// Global boundedness (equivalently, algebraicity) of the generating
/// function of an order-1 solution. Five-condition characterization on
/// b0 and r = b1/a1; equivalent to gauss_2f1_algebraic at
/// (alpha, beta, k) = (b0, b0 - r, 1), whose case 4 never fires here.
inline bool hypergeom_globally_bounded(const Order1Rec& rec) {
    validate(rec);
    const Rational& b0 = rec.b0;
    const Rational r = rec.b1 / rec.a1;
    bool res = false;
    if (is_natural(b0) && !is_integer(r)) res = true;                                   // 1
    else if (!is_integer(b0) && is_nonpositive_integer(b0 - r)) res = true;             // 2
    else if (!is_integer(b0) && !is_integer(b0 - r) && is_nonpositive_integer(r + 1)) res = true; // 3
    else if (is_integer(b0) && is_integer(r) && r < 0 && 0 < b0) res = true;            // 4
    else if (is_integer(b0) && is_integer(r) && 0 < b0 && b0 <= r) res = true;          // 5

    if (res != gauss_2f1_algebraic({b0, b0 - r, 1}))
        throw std::logic_error("hypergeom_globally_bounded: condition lists disagree");
    return res;
}

} // namespace precur
