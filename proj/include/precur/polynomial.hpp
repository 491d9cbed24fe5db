#pragma once

#include "precur/rational.hpp"

#include <vector>

namespace precur {

/// Dense univariate polynomial over Q, index = degree.
/// No trailing zero coefficients; the zero polynomial has an empty
/// coefficient list and degree() reports the "minus infinity" sentinel -1.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly constant(const Rational& v) { return UniPoly({v}); }

    const std::vector<Rational>& coefficients() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    /// -1 stands for the degree of the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    Rational coeff(size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Rational> d(c_.size() - 1);
        for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rational(static_cast<long>(k));
        return UniPoly(std::move(d));
    }

    friend UniPoly operator+(const UniPoly& p, const UniPoly& q) {
        std::vector<Rational> r(std::max(p.c_.size(), q.c_.size()), Rational(0));
        for (size_t k = 0; k < r.size(); ++k) r[k] = p.coeff(k) + q.coeff(k);
        return UniPoly(std::move(r));
    }
    friend UniPoly operator-(const UniPoly& p, const UniPoly& q) {
        std::vector<Rational> r(std::max(p.c_.size(), q.c_.size()), Rational(0));
        for (size_t k = 0; k < r.size(); ++k) r[k] = p.coeff(k) - q.coeff(k);
        return UniPoly(std::move(r));
    }
    friend UniPoly operator*(const UniPoly& p, const UniPoly& q) {
        if (p.is_zero() || q.is_zero()) return {};
        std::vector<Rational> r(p.c_.size() + q.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < p.c_.size(); ++i)
            for (size_t j = 0; j < q.c_.size(); ++j) r[i + j] += p.c_[i] * q.c_[j];
        return UniPoly(std::move(r));
    }
    friend UniPoly operator*(const Rational& s, const UniPoly& p) {
        std::vector<Rational> r = p.c_;
        for (auto& v : r) v *= s;
        return UniPoly(std::move(r));
    }
    friend bool operator==(const UniPoly& p, const UniPoly& q) { return p.c_ == q.c_; }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

} // namespace precur
