#pragma once

#include "precur/integral.hpp"
#include "precur/rational.hpp"
#include "precur/recurrence.hpp"

#include <cassert>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace precur {

/// Canonical form of a line direction: coprime integers, first nonzero
/// entry positive.
inline InitialPair canonical_pair(const InitialPair& p) {
    if (p.s0 == 0 && p.s1 == 0) throw std::invalid_argument("canonical_pair: zero pair");
    Int l = boost::multiprecision::lcm(denom(p.s0), denom(p.s1));
    Int u = numer(p.s0) * (l / denom(p.s0));
    Int v = numer(p.s1) * (l / denom(p.s1));
    Int g = boost::multiprecision::gcd(u, v);
    u /= g;
    v /= g;
    if (u < 0 || (u == 0 && v < 0)) {
        u = -u;
        v = -v;
    }
    return {Rational(u), Rational(v)};
}

/// The 2x2 rational system M*(s0,s1)^T = 0 extracted from the requirement
/// that the transcendental parts of b0*s0*I1 + (a1*s0+b0*s1+b1*s0+s1)*I2
/// cancel. The constant-based sub-cases fill only the first row; the
/// log-residue sub-case with conjugate roots stores the quadratic row and
/// its rational/radical split.
struct CombinationSystem {
    enum class Provenance { GenericConstants, PatchedConstants, LogResidues } provenance;
    std::vector<std::vector<Rational>> rows; // 2x2, rationalized
    std::optional<QuadraticNumber> q11, q12; // set for conjugate-root log residues

    Rational det() const { return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]; }
    bool is_zero() const {
        for (const auto& r : rows)
            for (const auto& v : r)
                if (v != 0) return false;
        return true;
    }
};

struct CaseVerdict {
    enum class Kind {
        AllAlgebraic,      // C1
        AllTranscendental, // C2
        Line,              // C3
        Unsupported,
    };
    Kind kind;
    std::optional<InitialPair> pair_raw; // line direction as first computed
    std::optional<InitialPair> pair;     // canonicalized line direction
    std::optional<IntegralAnalysis> I1, I2;
    std::optional<CombinationSystem> system;
    std::string branch; // which part of the algorithm decided
    ClassDiagnostic diagnostic;
};

namespace detail {

inline CaseVerdict line_verdict(InitialPair raw, std::string branch) {
    CaseVerdict v{CaseVerdict::Kind::Line, raw, canonical_pair(raw), {}, {}, {}, std::move(branch), {}};
    return v;
}

/// Kernel of a nonzero singular 2x2 rational matrix.
inline InitialPair kernel_of(const CombinationSystem& sys) {
    for (const auto& r : sys.rows)
        if (r[0] != 0 || r[1] != 0) return {r[1], -r[0]};
    throw std::logic_error("kernel_of: zero system");
}

} // namespace detail

/// Resolves the (Transcendental, Transcendental) table row: decides whether
/// some line of initial pairs still cancels every transcendental part.
inline CaseVerdict combine_transcendental(const Order2Rec& rec, const IntegralAnalysis& I1,
                                          const IntegralAnalysis& I2) {
    if (I1.verdict != IntegralVerdict::Transcendental ||
        I2.verdict != IntegralVerdict::Transcendental)
        throw std::invalid_argument("combine_transcendental: both integrals must be transcendental");

    const Rational b0 = rec.b0;
    const Rational ab = rec.a1 + rec.b1;
    CombinationSystem sys;
    sys.rows.assign(2, std::vector<Rational>(2, Rational(0)));

    const bool log_case = I1.kind == IntegralKind::PartialFractions;
    if (log_case) {
        if (I2.kind != IntegralKind::PartialFractions || !I1.logs || !I2.logs)
            throw std::invalid_argument("combine_transcendental: mismatched certificate kinds");
        sys.provenance = CombinationSystem::Provenance::LogResidues;
        const LogCoefficients& l1 = *I1.logs;
        const LogCoefficients& l2 = *I2.logs;
        if (l1.roots.kind == QuadRoots::Kind::ConjugatePair) {
            QuadraticNumber m11 = b0 * *l1.A1_quad + ab * *l2.A1_quad;
            QuadraticNumber m12 = (b0 + 1) * *l2.A1_quad;
            sys.q11 = m11;
            sys.q12 = m12;
            // Row 2 of the quadratic system is the conjugate of row 1, so a
            // rational kernel is exactly the joint kernel of the rational and
            // radical parts of row 1.
            sys.rows = {{m11.rational_part(), m12.rational_part()},
                        {m11.radical_part(), m12.radical_part()}};
        } else {
            sys.rows = {{b0 * l1.A1 + ab * l2.A1, (b0 + 1) * l2.A1},
                        {b0 * l1.B1 + ab * l2.B1, (b0 + 1) * l2.B1}};
        }
        if (sys.det() != 0) {
            CaseVerdict v{CaseVerdict::Kind::AllTranscendental, {}, {}, I1, I2, sys,
                          "combination/log-residues", {}};
            return v;
        }
        if (sys.is_zero()) throw std::logic_error("combine_transcendental: vanishing log system");
        CaseVerdict v = detail::line_verdict(detail::kernel_of(sys), "combination/log-residues");
        v.I1 = I1;
        v.I2 = I2;
        v.system = sys;
        return v;
    }

    const bool patched = I1.kind == IntegralKind::HalfIntegerBoundary ||
                         I1.kind == IntegralKind::HalfIntegerPatched;
    Rational k1, k2;
    if (patched) {
        if (!I1.certificate || !I2.certificate ||
            (I2.kind != IntegralKind::HalfIntegerBoundary &&
             I2.kind != IntegralKind::HalfIntegerPatched))
            throw std::invalid_argument("combine_transcendental: mismatched certificate kinds");
        sys.provenance = CombinationSystem::Provenance::PatchedConstants;
        k1 = I1.certificate->c_tilde;
        k2 = I2.certificate->c_tilde;
    } else {
        if (!I1.certificate || !I2.certificate ||
            (I2.kind != IntegralKind::Generic && I2.kind != IntegralKind::BaseCase))
            throw std::invalid_argument("combine_transcendental: mismatched certificate kinds");
        sys.provenance = CombinationSystem::Provenance::GenericConstants;
        k1 = I1.certificate->c;
        k2 = I2.certificate->c;
    }
    // Transcendence of I2 forces k2 != 0, so the single condition
    // b0*s0*k1 + (a1*s0 + b0*s1 + b1*s0 + s1)*k2 = 0 is a genuine line.
    if (k2 == 0) throw std::logic_error("combine_transcendental: transcendental I2 with zero constant");
    sys.rows[0] = {b0 * k1 + ab * k2, (b0 + 1) * k2};
    InitialPair raw{(b0 + 1) * k2, -(b0 * k1 + ab * k2)};
    if (b0 * raw.s0 * k1 + (rec.a1 * raw.s0 + b0 * raw.s1 + rec.b1 * raw.s0 + raw.s1) * k2 != 0)
        throw std::logic_error("combine_transcendental: kernel pair fails back-substitution");
    CaseVerdict v = detail::line_verdict(
        raw, patched ? "combination/patched-constants" : "combination/generic-constants");
    v.I1 = I1;
    v.I2 = I2;
    v.system = sys;
    return v;
}

inline CaseVerdict decide_case(const Order2Rec& rec) {
    CaseVerdict v{};
    v.diagnostic = check_restricted_class(rec);
    if (!v.diagnostic.in_restricted_class) {
        v.kind = CaseVerdict::Kind::Unsupported;
        v.branch = "out-of-class";
        return v;
    }
    const ClassDiagnostic diag = v.diagnostic;
    const long b0 = to_long(rec.b0);
    const Rational r = rec.b1 / rec.a1;

    if (rec.a1 * rec.a1 == 4 * rec.a2) {
        // g = (1 + c*x)^2, c = a1/2: both integrals involve a single factor
        // (1+c*x)^sigma with sigma = 2(b1/a1 - b0); a lone log coefficient
        // per integral replaces the full combination analysis.
        v.branch = "double-root";
        const Rational sigma = 2 * (r - rec.b0);
        const Rational c = rec.a1 / 2;
        Rational t1(0), t2(0);
        if (is_negative_integer(sigma)) {
            const long m = -to_long(sigma) - 1;
            if (b0 >= m) t2 = double_root_log_coeff(b0, c, to_long(sigma));
            if (b0 >= 1 && b0 - 1 >= m) t1 = double_root_log_coeff(b0 - 1, c, to_long(sigma));
        }
        if (t2 == 0) {
            v.kind = CaseVerdict::Kind::AllAlgebraic;
            return v;
        }
        InitialPair raw{(rec.b0 + 1) * t2, -(rec.b0 * t1 + (rec.a1 + rec.b1) * t2)};
        v = detail::line_verdict(raw, "double-root");
        v.diagnostic = diag;
        return v;
    }

    if (b0 == 0) {
        // Here s0 does not constrain the transcendental part at all; the
        // n = 0 base-case analysis applied to q = b1/a1 settles everything.
        v.branch = "b0-zero";
        if (base_case_algebraic(r) == IntegralVerdict::Algebraic) {
            v.kind = CaseVerdict::Kind::AllAlgebraic;
            return v;
        }
        v = detail::line_verdict({Rational(1), -rec.a1 - rec.b1}, "b0-zero");
        v.diagnostic = diag;
        return v;
    }

    const Rational q = -rec.b0 + r;
    IntegralAnalysis I1 = analyze_integral({b0 - 1, rec.a1, rec.a2, q});
    IntegralAnalysis I2 = analyze_integral({b0, rec.a1, rec.a2, q});
    const bool t1 = I1.verdict == IntegralVerdict::Transcendental;
    const bool t2 = I2.verdict == IntegralVerdict::Transcendental;
    if (!t1 && !t2) {
        v.kind = CaseVerdict::Kind::AllAlgebraic;
        v.branch = "table/alg-alg";
    } else if (!t1 && t2) {
        v = detail::line_verdict({rec.b0 + 1, -rec.a1 - rec.b1}, "table/alg-trans");
    } else if (t1 && !t2) {
        v = detail::line_verdict({Rational(0), Rational(1)}, "table/trans-alg");
    } else {
        v = combine_transcendental(rec, I1, I2);
        v.diagnostic = diag;
        return v;
    }
    v.diagnostic = diag;
    v.I1 = I1;
    v.I2 = I2;
    return v;
}

} // namespace precur
