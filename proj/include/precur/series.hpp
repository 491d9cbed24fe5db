#pragma once

#include "precur/rational.hpp"

#include <stdexcept>
#include <vector>

namespace precur {

/// Truncated power series over Q with exact coefficients.
/// order() is the number of known coefficients N; arithmetic never
/// claims coefficients beyond the minimum of the operand orders.
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    explicit TruncatedSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {}

    static TruncatedSeries zero(size_t order) {
        return TruncatedSeries(std::vector<Rational>(order, Rational(0)));
    }
    static TruncatedSeries one(size_t order) {
        auto s = zero(order);
        if (order > 0) s.c_[0] = 1;
        return s;
    }

    size_t order() const { return c_.size(); }
    const std::vector<Rational>& coefficients() const { return c_; }
    Rational coeff(size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
    Rational& at(size_t k) { return c_.at(k); }

    friend TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g) {
        size_t n = std::min(f.order(), g.order());
        std::vector<Rational> r(n);
        for (size_t k = 0; k < n; ++k) r[k] = f.c_[k] + g.c_[k];
        return TruncatedSeries(std::move(r));
    }
    friend TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g) {
        size_t n = std::min(f.order(), g.order());
        std::vector<Rational> r(n);
        for (size_t k = 0; k < n; ++k) r[k] = f.c_[k] - g.c_[k];
        return TruncatedSeries(std::move(r));
    }
    friend TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) {
        size_t n = std::min(f.order(), g.order());
        std::vector<Rational> r(n, Rational(0));
        for (size_t i = 0; i < n; ++i) {
            if (f.c_[i] == 0) continue;
            for (size_t j = 0; i + j < n; ++j) r[i + j] += f.c_[i] * g.c_[j];
        }
        return TruncatedSeries(std::move(r));
    }
    friend TruncatedSeries operator*(const Rational& s, const TruncatedSeries& f) {
        std::vector<Rational> r = f.c_;
        for (auto& v : r) v *= s;
        return TruncatedSeries(std::move(r));
    }
    friend bool operator==(const TruncatedSeries& f, const TruncatedSeries& g) {
        return f.c_ == g.c_;
    }

    /// Multiplication by x^k (known order grows by k: low coefficients stay exact).
    TruncatedSeries shift(size_t k) const {
        std::vector<Rational> r(c_.size() + k, Rational(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
        return TruncatedSeries(std::move(r));
    }

private:
    std::vector<Rational> c_;
};

/// Termwise antiderivative with zero constant term; [x^{k+1}] out = [x^k] in / (k+1).
inline TruncatedSeries series_integrate(const TruncatedSeries& s) {
    std::vector<Rational> r(s.order() + 1, Rational(0));
    for (size_t k = 0; k < s.order(); ++k) r[k + 1] = s.coeff(k) / Rational(static_cast<long>(k) + 1);
    return TruncatedSeries(std::move(r));
}

inline TruncatedSeries series_differentiate(const TruncatedSeries& s) {
    if (s.order() == 0) return TruncatedSeries{};
    std::vector<Rational> r(s.order() - 1);
    for (size_t k = 0; k + 1 < s.order(); ++k) r[k] = s.coeff(k + 1) * Rational(static_cast<long>(k) + 1);
    return TruncatedSeries(std::move(r));
}

/// First N coefficients of (1 + a1*x + a2*x^2)^q by binomial-series
/// composition: sum_k binom(q,k) (a1*x + a2*x^2)^k, with the generalized
/// binomials built by the running product.
inline TruncatedSeries series_expand_quadratic_power(const Rational& a1, const Rational& a2,
                                                     const Rational& q, size_t N) {
    if (N < 1) throw std::invalid_argument("series_expand_quadratic_power: N >= 1 required");
    std::vector<Rational> out(N, Rational(0));
    out[0] = 1;
    // upow holds (a1*x + a2*x^2)^k / x^k, truncated so that upow[i] = [x^{k+i}] u^k.
    std::vector<Rational> upow{Rational(1)};
    Rational bin(1);
    for (size_t k = 1; k < N; ++k) {
        bin *= (q - Rational(static_cast<long>(k) - 1)) / Rational(static_cast<long>(k));
        // multiply by (a1 + a2*x), truncated to N - k coefficients
        size_t len = std::min(upow.size() + 1, N - k);
        std::vector<Rational> next(len, Rational(0));
        for (size_t i = 0; i < upow.size(); ++i) {
            if (i < len) next[i] += a1 * upow[i];
            if (i + 1 < len) next[i + 1] += a2 * upow[i];
        }
        upow = std::move(next);
        if (bin == 0) break; // q natural: binomial series terminates
        for (size_t i = 0; i < upow.size(); ++i) out[k + i] += bin * upow[i];
    }
    return TruncatedSeries(std::move(out));
}

} // namespace precur
