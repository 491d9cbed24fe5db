#pragma once

#include "precur/linalg.hpp"
#include "precur/polynomial.hpp"
#include "precur/rational.hpp"
#include "precur/roots.hpp"

#include <cassert>
#include <optional>
#include <stdexcept>
#include <vector>

namespace precur {

/// The integral under study: I = \int x^n (1 + a1*x + a2*x^2)^q dx.
struct IntegralSpec {
    long n = 0;
    Rational a1, a2, q;
};

inline void validate(const IntegralSpec& spec) {
    if (spec.n < 0) throw std::invalid_argument("IntegralSpec: n < 0");
    if (spec.a1 == 0) throw std::invalid_argument("IntegralSpec: a1 = 0");
    if (spec.a2 == 0) throw std::invalid_argument("IntegralSpec: a2 = 0");
}

enum class IntegralVerdict { Algebraic, Transcendental };

/// Witness of the exact rewriting
///   x^n = c + c_tilde*x^(-2q-1) + C'(x)*g(x) + (q+1)*(a1+2*a2*x)*C(x),
/// g = 1 + a1*x + a2*x^2, which integrates to
///   I = c*\int g^q + c_tilde*\int x^(-2q-1) g^q + C(x)*g^(q+1).
/// The c_tilde term is present only when q + 3/2 is a nonpositive integer
/// and -2q-1 <= n.
struct ReductionCertificate {
    Rational c;
    Rational c_tilde;
    UniPoly C; // degree <= n-1
};

/// Exact coefficient-wise check of the defining identity above.
inline bool certificate_holds(const IntegralSpec& spec, const ReductionCertificate& cert) {
    UniPoly g({Rational(1), spec.a1, spec.a2});
    UniPoly lin({spec.a1, 2 * spec.a2});
    UniPoly rhs = UniPoly::constant(cert.c) + cert.C.derivative() * g +
                  (spec.q + 1) * (lin * cert.C);
    std::vector<Rational> lhs_c(static_cast<size_t>(spec.n) + 1, Rational(0));
    lhs_c.back() = 1;
    UniPoly lhs(std::move(lhs_c));
    if (cert.c_tilde != 0) {
        Rational m = -2 * spec.q - 1;
        if (!is_natural(m)) return false;
        std::vector<Rational> t(static_cast<size_t>(to_long(m)) + 1, Rational(0));
        t.back() = cert.c_tilde;
        rhs = rhs + UniPoly(std::move(t));
    }
    return lhs == rhs;
}

/// Solves the coefficient-matching linear system for (c, c_tilde, C).
/// Requires n >= 1. The poles q in {-1, -2, ...} are routed to partial
/// fractions instead; the remaining half-integer poles q in
/// {-3/2, ..., -(n+1)/2} are exactly the ones the patched (c_tilde) form
/// absorbs, with the free coefficient C_{-2q-2} pinned to zero.
inline ReductionCertificate reduce_integral(const IntegralSpec& spec) {
    validate(spec);
    const long n = spec.n;
    if (n < 1) throw std::invalid_argument("reduce_integral: n = 0 has the trivial certificate");
    if (is_negative_integer(spec.q))
        throw std::invalid_argument("reduce_integral: q is a negative integer (use partial fractions)");

    const bool half_family = is_nonpositive_integer(spec.q + Rational(3, 2));
    long m = -1; // the patched exponent -2q-1, when applicable
    bool patched = false;
    if (half_family) {
        m = to_long(-2 * spec.q - 1);
        patched = (n >= m);
    }
    if (!patched && is_integer(2 * spec.q)) {
        const Rational twoq = 2 * spec.q;
        if (twoq <= -2 && twoq >= Rational(-(n + 1)))
            throw std::domain_error("reduce_integral: pole in the coefficient recursion");
    }

    // Unknowns: c, [c_tilde], C_j (j = 0..n-1, skipping j = m-1 when patched).
    const long skip = patched ? m - 1 : -1;
    std::vector<long> col_of_c(static_cast<size_t>(n), -1);
    long ncols = patched ? 2 : 1;
    for (long j = 0; j < n; ++j)
        if (j != skip) col_of_c[static_cast<size_t>(j)] = ncols++;
    if (ncols != n + 1) throw std::logic_error("reduce_integral: system not square");

    std::vector<std::vector<Rational>> A(static_cast<size_t>(n + 1),
                                         std::vector<Rational>(static_cast<size_t>(ncols), Rational(0)));
    std::vector<Rational> b(static_cast<size_t>(n + 1), Rational(0));
    b[static_cast<size_t>(n)] = 1;
    A[0][0] = 1;
    if (patched) A[static_cast<size_t>(m)][1] = 1;
    for (long j = 0; j < n; ++j) {
        long col = col_of_c[static_cast<size_t>(j)];
        if (col < 0) continue;
        Rational jj(j);
        if (j >= 1) A[static_cast<size_t>(j - 1)][static_cast<size_t>(col)] += jj;
        A[static_cast<size_t>(j)][static_cast<size_t>(col)] += spec.a1 * (jj + spec.q + 1);
        A[static_cast<size_t>(j + 1)][static_cast<size_t>(col)] += spec.a2 * (jj + 2 * (spec.q + 1));
    }
    auto sol = solve_linear_system(std::move(A), std::move(b));
    if (!sol) throw std::domain_error("reduce_integral: coefficient system is singular");

    ReductionCertificate cert;
    cert.c = (*sol)[0];
    cert.c_tilde = patched ? (*sol)[1] : Rational(0);
    std::vector<Rational> C(static_cast<size_t>(n), Rational(0));
    for (long j = 0; j < n; ++j)
        if (long col = col_of_c[static_cast<size_t>(j)]; col >= 0)
            C[static_cast<size_t>(j)] = (*sol)[static_cast<size_t>(col)];
    cert.C = UniPoly(std::move(C));
    if (!certificate_holds(spec, cert))
        throw std::logic_error("reduce_integral: certificate identity violated");
    return cert;
}

namespace detail {

template <class F>
F field_pow(const F& base, long e, const F& one) {
    F acc = one, b = base;
    long k = e < 0 ? -e : e;
    while (k > 0) {
        if (k & 1) acc = acc * b;
        b = b * b;
        k >>= 1;
    }
    return e < 0 ? one / acc : acc;
}

/// Raw residue of x^n (1+beta*x)^(-m) at x = -1/alpha, i.e. the coefficient
/// of u^(m-1) in ((u-1)/alpha)^n (1 + beta*(u-1)/alpha)^(-m) with u = 1+alpha*x.
template <class F>
F first_residue(long n, long m, const F& alpha, const F& beta) {
    const F one = alpha / alpha;
    const F gamma = one - beta / alpha; // (alpha - beta)/alpha, nonzero
    const F ratio = (beta / alpha) / gamma;
    F sum = one - one;
    F rpow = one;
    for (long k = 0; k <= m - 1; ++k) {
        Int weight = binomial_int(n, m - 1 - k) * binomial_int(m + k - 1, k);
        if (weight != 0) sum = sum + Rational(weight) * rpow;
        rpow = rpow * ratio;
    }
    Rational sign((n + m - 1) % 2 == 0 ? 1 : -1);
    return sign * (field_pow(alpha, -n, one) * field_pow(gamma, -m, one) * sum);
}

} // namespace detail

/// Coefficients of the two logarithmic terms of \int x^n g^q dx for
/// q a negative integer and distinct roots: A1 multiplies ln(1+alpha*x)
/// and B1 multiplies ln(1+beta*x) (the raw residues divided by the root).
struct LogCoefficients {
    QuadRoots roots;
    Rational A1, B1;                                 // rational-root case
    std::optional<QuadraticNumber> A1_quad, B1_quad; // conjugate roots; B1 = conj(A1)

    bool both_vanish() const {
        if (roots.kind == QuadRoots::Kind::ConjugatePair) return A1_quad->is_zero();
        return A1 == 0 && B1 == 0;
    }
};

inline LogCoefficients partial_fraction_log_coeffs(const IntegralSpec& spec) {
    validate(spec);
    if (!is_negative_integer(spec.q))
        throw std::invalid_argument("partial_fraction_log_coeffs: q not a negative integer");
    const long m = to_long(-spec.q);
    LogCoefficients out;
    out.roots = quad_root_pair(spec.a1, spec.a2);
    switch (out.roots.kind) {
    case QuadRoots::Kind::DoubleRoot:
        throw std::invalid_argument("partial_fraction_log_coeffs: double root");
    case QuadRoots::Kind::RationalPair:
        out.A1 = detail::first_residue(spec.n, m, out.roots.alpha_rat, out.roots.beta_rat) /
                 out.roots.alpha_rat;
        out.B1 = detail::first_residue(spec.n, m, out.roots.beta_rat, out.roots.alpha_rat) /
                 out.roots.beta_rat;
        break;
    case QuadRoots::Kind::ConjugatePair: {
        QuadraticNumber raw =
            detail::first_residue(spec.n, m, *out.roots.alpha_quad, *out.roots.beta_quad);
        out.A1_quad = raw / *out.roots.alpha_quad;
        out.B1_quad = out.A1_quad->conjugate();
        break;
    }
    }
    return out;
}

/// n = 0 root case with distinct roots: \int g^q dx is algebraic exactly
/// when q is a natural number or q + 3/2 is a nonpositive integer
/// (q = -1 gives artanh and is covered by neither).
inline IntegralVerdict base_case_algebraic(const Rational& q) {
    if (is_natural(q) || is_nonpositive_integer(q + Rational(3, 2)))
        return IntegralVerdict::Algebraic;
    return IntegralVerdict::Transcendental;
}

/// Log coefficient of \int x^n (1+c*x)^sigma dx when sigma is an integer
/// <= -1 and n >= -sigma-1; the integral is algebraic exactly when no such
/// log term exists (the binomial below never vanishes in range).
inline Rational double_root_log_coeff(long n, const Rational& c, long sigma) {
    const long m = -sigma - 1;
    Rational t(binomial_int(n, m));
    if ((n - m) % 2 != 0) t = -t;
    return t * pow_rational(c, -n - 1);
}

enum class IntegralKind {
    PolynomialPower,    // q natural: polynomial antiderivative
    DoubleRoot,         // a1^2 = 4*a2: single-factor analysis
    PartialFractions,   // q negative integer
    BaseCase,           // n = 0
    HalfIntegerSmall,   // q + 3/2 in -N, n < -2q-1
    HalfIntegerBoundary,// q + 3/2 in -N, n = -2q-1: always transcendental
    HalfIntegerPatched, // q + 3/2 in -N, n > -2q-1
    Generic,
};

struct IntegralAnalysis {
    IntegralSpec spec;
    IntegralKind kind;
    IntegralVerdict verdict;
    std::optional<ReductionCertificate> certificate;
    std::optional<LogCoefficients> logs;
    std::optional<Rational> double_root_log; // set when kind = DoubleRoot and transcendental
};

inline IntegralAnalysis analyze_integral(const IntegralSpec& spec) {
    validate(spec);
    IntegralAnalysis out{spec, IntegralKind::Generic, IntegralVerdict::Algebraic, {}, {}, {}};

    if (is_natural(spec.q)) {
        out.kind = IntegralKind::PolynomialPower;
        return out;
    }
    if (spec.a1 * spec.a1 == 4 * spec.a2) {
        // g = (1 + c*x)^2 with c = a1/2; study x^n (1+c*x)^(2q).
        out.kind = IntegralKind::DoubleRoot;
        const Rational sigma = 2 * spec.q;
        const Rational c = spec.a1 / 2;
        if (is_negative_integer(sigma) && Rational(spec.n) >= -sigma - 1) {
            out.verdict = IntegralVerdict::Transcendental;
            out.double_root_log = double_root_log_coeff(spec.n, c, to_long(sigma));
        }
        return out;
    }
    if (is_negative_integer(spec.q)) {
        out.kind = IntegralKind::PartialFractions;
        out.logs = partial_fraction_log_coeffs(spec);
        out.verdict =
            out.logs->both_vanish() ? IntegralVerdict::Algebraic : IntegralVerdict::Transcendental;
        return out;
    }
    if (spec.n == 0) {
        out.kind = IntegralKind::BaseCase;
        out.verdict = base_case_algebraic(spec.q);
        out.certificate = ReductionCertificate{Rational(1), Rational(0), UniPoly{}};
        return out;
    }
    if (is_nonpositive_integer(spec.q + Rational(3, 2))) {
        const long m = to_long(-2 * spec.q - 1);
        if (m % 2 != 0) // q + 3/2 in -N forces -2q-1 even
            throw std::logic_error("analyze_integral: odd boundary exponent");
        out.certificate = reduce_integral(spec);
        if (spec.n < m) {
            out.kind = IntegralKind::HalfIntegerSmall;
            out.verdict = IntegralVerdict::Algebraic;
        } else if (spec.n == m) {
            out.kind = IntegralKind::HalfIntegerBoundary;
            out.verdict = IntegralVerdict::Transcendental;
            if (out.certificate->c_tilde == 0)
                throw std::logic_error("analyze_integral: boundary constant vanished");
        } else {
            out.kind = IntegralKind::HalfIntegerPatched;
            out.verdict = out.certificate->c_tilde == 0 ? IntegralVerdict::Algebraic
                                                        : IntegralVerdict::Transcendental;
        }
        return out;
    }
    out.kind = IntegralKind::Generic;
    out.certificate = reduce_integral(spec);
    out.verdict =
        out.certificate->c == 0 ? IntegralVerdict::Algebraic : IntegralVerdict::Transcendental;
    return out;
}

inline IntegralVerdict decide_integral(const IntegralSpec& spec) {
    return analyze_integral(spec).verdict;
}

} // namespace precur
