#pragma once

#include "precur/linalg.hpp"
#include "precur/rational.hpp"
#include "precur/series.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace precur {

/// Largest prime factor found by trial division up to `bound`; any cofactor
/// left over has only prime factors beyond the bound and is returned as-is,
/// which can only enlarge the report. Convention: result for 0 and ±1 is 1.
inline Int largest_prime_factor(Int n, const Int& bound = 1000000) {
    if (n < 0) n = -n;
    if (n <= 1) return 1;
    Int best = 1;
    for (Int p = 2; p <= bound && p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        best = p;
        while (n % p == 0) n /= p;
    }
    if (n > 1) best = std::max(best, n);
    return best;
}

/// Denominator forensics for a finite stretch of a sequence. Absence of
/// large primes at finite depth is evidence of almost-integrality, not
/// proof; presence of ever-larger primes is how non-globally-bounded
/// directions reveal themselves.
struct DenominatorReport {
    size_t depth = 0;
    Int max_prime_seen = 1;                 // across all denominators
    std::optional<size_t> first_bad_index;  // first term whose denominator has a prime > threshold
    std::vector<Int> largest_prime_factors; // per-term, of the denominator
    bool heuristic_only = true;
};

inline DenominatorReport almost_integrality_probe(const std::vector<Rational>& terms,
                                                  const Int& prime_threshold = 50,
                                                  const Int& trial_bound = 1000000) {
    if (terms.empty()) throw std::invalid_argument("almost_integrality_probe: no terms");
    DenominatorReport rep;
    rep.depth = terms.size();
    rep.largest_prime_factors.reserve(terms.size());
    for (size_t i = 0; i < terms.size(); ++i) {
        Int p = largest_prime_factor(denom(terms[i]), trial_bound);
        rep.largest_prime_factors.push_back(p);
        rep.max_prime_seen = std::max(rep.max_prime_seen, p);
        if (!rep.first_bad_index && p > prime_threshold) rep.first_bad_index = i;
    }
    return rep;
}

namespace detail {

inline Int mod_pow_int(Int base, Int e, const Int& m) {
    Int acc = 1;
    base %= m;
    if (base < 0) base += m;
    while (e > 0) {
        if (e % 2 == 1) acc = acc * base % m;
        base = base * base % m;
        e /= 2;
    }
    return acc;
}

/// Inverse mod a prime p (Fermat).
inline Int mod_inverse(const Int& a, const Int& p) {
    Int r = a % p;
    if (r < 0) r += p;
    if (r == 0) throw std::domain_error("mod_inverse: not invertible");
    return mod_pow_int(r, p - 2, p);
}

inline Int rational_mod(const Rational& r, const Int& p) {
    Int n = numer(r) % p;
    if (n < 0) n += p;
    return n * mod_inverse(denom(r), p) % p;
}

inline bool is_prime_int(const Int& n) {
    if (n < 2) return false;
    for (Int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace detail

/// Residues d_{p-n-1} mod p where (1 + a1*x + a2*x^2)^(-(n+1)/2) = sum d_k x^k.
/// A nonzero residue certifies that the antiderivative of
/// x^n (1+a1*x+a2*x^2)^(-(n+1)/2) has a denominator divisible by p.
inline std::vector<std::pair<long, long>> klazar_luca_d_probe(const Rational& a1, const Rational& a2,
                                                              long exponent_n,
                                                              const std::vector<long>& primes) {
    if (exponent_n < 0 || exponent_n % 2 != 0)
        throw std::invalid_argument("klazar_luca_d_probe: exponent must be an even natural");
    long maxp = 0;
    for (long p : primes) {
        Int P(p);
        if (p <= 3 || !detail::is_prime_int(P))
            throw std::invalid_argument("klazar_luca_d_probe: primes must be > 3");
        if (numer(a1) % P == 0 || denom(a1) % P == 0 || numer(a2) % P == 0 || denom(a2) % P == 0)
            throw std::invalid_argument("klazar_luca_d_probe: prime not coprime to a1, a2");
        maxp = std::max(maxp, p);
    }
    const Rational q(-(exponent_n + 1), 2);
    auto d = series_expand_quadratic_power(a1, a2, q, static_cast<size_t>(maxp) + 1);
    std::vector<std::pair<long, long>> out;
    out.reserve(primes.size());
    for (long p : primes) {
        Int res = detail::rational_mod(d.coeff(static_cast<size_t>(p - exponent_n - 1)), Int(p));
        out.emplace_back(p, static_cast<long>(res));
    }
    return out;
}

/// A certified annihilating polynomial: P(x, y) with integer coefficients
/// such that P(x, S(x)) = 0 mod x^verified_order, checked exactly.
struct AnnihilatorGuess {
    std::vector<std::vector<Int>> coeff; // coeff[i][j] multiplies x^i y^j
    size_t verified_order = 0;

    long deg_x() const { return static_cast<long>(coeff.size()) - 1; }
    long deg_y() const { return coeff.empty() ? -1 : static_cast<long>(coeff[0].size()) - 1; }
};

/// Searches for a nonzero P with deg_x <= dx, deg_y <= dy annihilating the
/// series to its full known order. Returns nothing when no such P exists at
/// these bounds (which is evidence of transcendence, not proof).
inline std::optional<AnnihilatorGuess> guess_annihilator(const TruncatedSeries& s, long dx, long dy,
                                                         size_t margin = 40) {
    const size_t cols = static_cast<size_t>(dx + 1) * static_cast<size_t>(dy + 1);
    if (s.order() < cols + margin)
        throw std::invalid_argument("guess_annihilator: series too short for the degree bounds");
    const size_t rows = s.order();

    // Column (i, j) holds the coefficients of x^i * S(x)^j.
    std::vector<TruncatedSeries> ypow;
    ypow.push_back(TruncatedSeries::one(rows));
    for (long j = 1; j <= dy; ++j) ypow.push_back(ypow.back() * s);

    std::vector<std::vector<Rational>> colsv;
    colsv.reserve(cols);
    for (long i = 0; i <= dx; ++i)
        for (long j = 0; j <= dy; ++j) {
            std::vector<Rational> col(rows, Rational(0));
            for (size_t k = static_cast<size_t>(i); k < rows; ++k)
                col[k] = ypow[static_cast<size_t>(j)].coeff(k - static_cast<size_t>(i));
            colsv.push_back(std::move(col));
        }

    std::vector<std::vector<Int>> m(rows, std::vector<Int>(cols));
    for (size_t r = 0; r < rows; ++r) {
        Int l = 1;
        for (size_t c = 0; c < cols; ++c) l = boost::multiprecision::lcm(l, denom(colsv[c][r]));
        for (size_t c = 0; c < cols; ++c) {
            const Rational& v = colsv[c][r];
            m[r][c] = numer(v) * (l / denom(v));
        }
    }
    auto kernel = integer_kernel_vector(std::move(m));
    if (!kernel) return std::nullopt;

    AnnihilatorGuess g;
    g.coeff.assign(static_cast<size_t>(dx + 1), std::vector<Int>(static_cast<size_t>(dy + 1), 0));
    size_t idx = 0;
    for (long i = 0; i <= dx; ++i)
        for (long j = 0; j <= dy; ++j) g.coeff[static_cast<size_t>(i)][static_cast<size_t>(j)] = (*kernel)[idx++];
    g.verified_order = rows;

    // The kernel came from exact elimination, but verify the congruence anyway.
    TruncatedSeries acc = TruncatedSeries::zero(rows);
    idx = 0;
    for (long i = 0; i <= dx; ++i)
        for (long j = 0; j <= dy; ++j) {
            const Int& w = (*kernel)[idx++];
            if (w == 0) continue;
            acc = acc + Rational(w) * ypow[static_cast<size_t>(j)].shift(static_cast<size_t>(i));
        }
    for (size_t k = 0; k < rows; ++k)
        if (acc.coeff(k) != 0) throw std::logic_error("guess_annihilator: unverified kernel vector");
    return g;
}

namespace detail {

inline Int radical(Int k) {
    if (k < 0) k = -k;
    Int r = 1;
    for (Int p = 2; p * p <= k; ++p) {
        if (k % p != 0) continue;
        r *= p;
        while (k % p == 0) k /= p;
    }
    if (k > 1) r *= k;
    return r;
}

} // namespace detail

/// Integrality of (1 + a*x + b*x^2)^lambda for integers a, b: with k the
/// reduced denominator of lambda, the series has integer coefficients
/// exactly when a, b are multiples of k*rad(k), or k = 2*kappa with a, b
/// multiples of kappa*rad(kappa) and (a, b) = (2, 1) mod 4.
inline bool quadratic_power_integral(const Int& a, const Int& b, const Rational& lam) {
    const Int k = denom(lam);
    const Int krad = k * detail::radical(k);
    auto divides = [](const Int& d, const Int& v) { return v % d == 0; };
    if (divides(krad, a) && divides(krad, b)) return true;
    if (k % 2 == 0) {
        const Int kappa = k / 2;
        const Int kapparad = kappa * detail::radical(kappa);
        auto mod4 = [](Int v) { v %= 4; return v < 0 ? v + 4 : v; };
        if (divides(kapparad, a) && divides(kapparad, b) && mod4(a) == 2 && mod4(b) == 1)
            return true;
    }
    return false;
}

/// a_n = sum_k binom(n,k)^2 binom(n+k,k): the smaller of the two classical
/// zeta-value sequences, satisfying n^2 a_n = (11n^2-11n+3) a_{n-1} + (n-1)^2 a_{n-2}.
inline Int apery_small(long n) {
    if (n < 0) throw std::invalid_argument("apery_small: n < 0");
    Int acc = 0;
    for (long k = 0; k <= n; ++k) {
        Int b = binomial_int(n, k);
        acc += b * b * binomial_int(n + k, k);
    }
    return acc;
}

inline std::vector<Rational> apery_small_terms(const Rational& s0, const Rational& s1, size_t depth) {
    std::vector<Rational> s{s0, s1};
    for (size_t n = 2; n <= depth; ++n) {
        Rational nn(static_cast<long>(n));
        s.push_back(((11 * nn * nn - 11 * nn + 3) * s[n - 1] + (nn - 1) * (nn - 1) * s[n - 2]) /
                    (nn * nn));
    }
    return s;
}

/// n^3 a_n = (34n^3 - 51n^2 + 27n - 5) a_{n-1} - (n-1)^3 a_{n-2}: the larger
/// companion sequence; its integral direction starts (1, 5).
inline std::vector<Rational> apery_big_terms(const Rational& s0, const Rational& s1, size_t depth) {
    std::vector<Rational> s{s0, s1};
    for (size_t n = 2; n <= depth; ++n) {
        Rational nn(static_cast<long>(n));
        s.push_back(((34 * nn * nn * nn - 51 * nn * nn + 27 * nn - 5) * s[n - 1] -
                     (nn - 1) * (nn - 1) * (nn - 1) * s[n - 2]) /
                    (nn * nn * nn));
    }
    return s;
}

struct AperyUniquenessReport {
    DenominatorReport on_line;  // direction (1, 3)
    DenominatorReport off_line; // direction (0, 1)
};

/// The (1,3) direction stays integral while (0,1) picks up large prime
/// denominators — the one-dimensionality of the integral solution space.
inline AperyUniquenessReport apery_uniqueness_probe(size_t depth, const Int& prime_threshold = 50) {
    if (depth < 10) throw std::invalid_argument("apery_uniqueness_probe: depth too small");
    AperyUniquenessReport rep{
        almost_integrality_probe(apery_small_terms(1, 3, depth), prime_threshold),
        almost_integrality_probe(apery_small_terms(0, 1, depth), prime_threshold)};
    return rep;
}

} // namespace precur
