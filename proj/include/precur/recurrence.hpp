#pragma once

#include "precur/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace precur {

/// (n + b0) s_n + (a1*n + b1) s_{n-1} = 0, imposed for n >= 1.
struct Order1Rec {
    Rational b0, a1, b1;
};

/// (n + b0) s_n + (a1*n + b1) s_{n-1} + (a2*n + b2) s_{n-2} = 0, imposed for n >= 2.
struct Order2Rec {
    Rational b0, a1, b1, a2, b2;
};

struct InitialPair {
    Rational s0, s1;
    friend bool operator==(const InitialPair&, const InitialPair&) = default;
};

struct ClassDiagnostic {
    bool in_restricted_class = false;
    Rational b2_expected;
    bool b0_is_natural = false;
    std::vector<std::string> reasons;
};

inline void validate(const Order1Rec& rec) {
    if (rec.a1 == 0) throw std::invalid_argument("order-1 recurrence: a1 = 0");
    if (is_negative_integer(rec.b0))
        throw std::invalid_argument("order-1 recurrence: b0 is a negative integer");
}

/// The leading coefficient n + b0 must be nonzero for every n >= 2; the
/// textual class constraint (b0 not a negative integer <= -2) guarantees it.
inline void validate(const Order2Rec& rec) {
    if (rec.a1 == 0) throw std::invalid_argument("order-2 recurrence: a1 = 0");
    if (rec.a2 == 0) throw std::invalid_argument("order-2 recurrence: a2 = 0");
    if (is_integer(rec.b0) && rec.b0 <= -2)
        throw std::invalid_argument("order-2 recurrence: b0 is an integer <= -2");
}

/// Divides the raw coefficient pairs (lead, mid, trail) by the leading
/// n-coefficient so the recurrence reads (n + b0) s_n + ... = 0.
inline Order2Rec normalize(const std::pair<Rational, Rational>& lead,
                           const std::pair<Rational, Rational>& mid,
                           const std::pair<Rational, Rational>& trail) {
    if (lead.first == 0)
        throw std::invalid_argument("normalize: leading n-coefficient is zero");
    Order2Rec rec{lead.second / lead.first, mid.first / lead.first, mid.second / lead.first,
                  trail.first / lead.first, trail.second / lead.first};
    validate(rec);
    return rec;
}

inline Order1Rec normalize1(const std::pair<Rational, Rational>& lead,
                            const std::pair<Rational, Rational>& mid) {
    if (lead.first == 0)
        throw std::invalid_argument("normalize: leading n-coefficient is zero");
    Order1Rec rec{lead.second / lead.first, mid.first / lead.first, mid.second / lead.first};
    validate(rec);
    return rec;
}

inline Rational restricted_b2(const Order2Rec& rec) {
    return (2 * rec.a2 * rec.b1 - rec.a1 * rec.a2 * rec.b0) / rec.a1;
}

/// Membership in the restricted class the order-2 decider covers:
/// b2 = (2*a2*b1 - a1*a2*b0)/a1 and b0 a non-negative integer (b0 = 0 admitted).
inline ClassDiagnostic check_restricted_class(const Order2Rec& rec) {
    ClassDiagnostic d;
    d.b2_expected = restricted_b2(rec);
    d.b0_is_natural = is_natural(rec.b0);
    if (rec.b2 != d.b2_expected) d.reasons.push_back("b2 mismatch");
    if (!d.b0_is_natural) d.reasons.push_back("b0 not natural");
    d.in_restricted_class = d.reasons.empty();
    return d;
}

/// Unrolls s_n = -((a1*n + b1) s_{n-1} + (a2*n + b2) s_{n-2}) / (n + b0)
/// exactly; returns s_0 .. s_N.
inline std::vector<Rational> generate_terms(const Order2Rec& rec, const InitialPair& init, size_t N) {
    std::vector<Rational> s;
    s.reserve(N + 1);
    s.push_back(init.s0);
    if (N >= 1) s.push_back(init.s1);
    for (size_t n = 2; n <= N; ++n) {
        Rational lead = Rational(static_cast<long>(n)) + rec.b0;
        if (lead == 0) throw std::domain_error("generate_terms: n + b0 vanished");
        Rational nn(static_cast<long>(n));
        s.push_back(-((rec.a1 * nn + rec.b1) * s[n - 1] + (rec.a2 * nn + rec.b2) * s[n - 2]) / lead);
    }
    return s;
}

inline std::vector<Rational> generate_terms(const Order1Rec& rec, const Rational& s0, size_t N) {
    std::vector<Rational> s;
    s.reserve(N + 1);
    s.push_back(s0);
    for (size_t n = 1; n <= N; ++n) {
        Rational lead = Rational(static_cast<long>(n)) + rec.b0;
        if (lead == 0) throw std::domain_error("generate_terms: n + b0 vanished");
        Rational nn(static_cast<long>(n));
        s.push_back(-(rec.a1 * nn + rec.b1) * s[n - 1] / lead);
    }
    return s;
}

} // namespace precur
