#pragma once

#include "precur/quadratic.hpp"
#include "precur/rational.hpp"

#include <stdexcept>

namespace precur {

/// Roots (alpha, beta) of the factorization 1 + a1*x + a2*x^2 = (1 + alpha*x)(1 + beta*x),
/// i.e. the roots of t^2 - a1*t + a2 with alpha + beta = a1, alpha*beta = a2.
///
/// Convention: with irrational roots alpha = (a1 + sqrt(D))/2 (non-negative
/// radical part) and beta is its conjugate. With rational roots
/// alpha = (a1 - sqrt(D))/2, matching the factor labeling used by the
/// worked partial-fraction examples this code is tested against.
struct QuadRoots {
    enum class Kind { RationalPair, DoubleRoot, ConjugatePair };
    Kind kind;
    Rational discriminant;       // D = a1^2 - 4*a2
    Rational alpha_rat, beta_rat;        // valid for RationalPair / DoubleRoot
    std::optional<QuadraticNumber> alpha_quad, beta_quad; // valid for ConjugatePair
};

inline QuadRoots quad_root_pair(const Rational& a1, const Rational& a2) {
    if (a2 == 0) throw std::invalid_argument("quad_root_pair: a2 = 0 (not a quadratic)");
    QuadRoots out;
    out.discriminant = a1 * a1 - 4 * a2;
    if (out.discriminant == 0) {
        out.kind = QuadRoots::Kind::DoubleRoot;
        out.alpha_rat = out.beta_rat = a1 / 2;
        return out;
    }
    if (auto s = exact_sqrt(out.discriminant)) {
        out.kind = QuadRoots::Kind::RationalPair;
        out.alpha_rat = (a1 - *s) / 2;
        out.beta_rat = (a1 + *s) / 2;
        return out;
    }
    out.kind = QuadRoots::Kind::ConjugatePair;
    out.alpha_quad = QuadraticNumber(a1 / 2, Rational(1, 2), out.discriminant);
    out.beta_quad = out.alpha_quad->conjugate();
    return out;
}

} // namespace precur
