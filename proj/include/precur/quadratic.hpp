#pragma once

#include "precur/rational.hpp"

#include <stdexcept>
#include <string>

namespace precur {

/// An element a + b*sqrt(D) of the quadratic extension Q(sqrt(D)).
///
/// D is fixed per value and must not be the square of a rational;
/// callers with a square discriminant are expected to work with the
/// explicit rational roots instead. D < 0 is allowed (formal sqrt).
class QuadraticNumber {
public:
    QuadraticNumber(Rational rational_part, Rational radical_part, Rational discriminant)
        : a_(std::move(rational_part)), b_(std::move(radical_part)), d_(std::move(discriminant)) {
        if (is_rational_square(d_))
            throw std::invalid_argument("QuadraticNumber: discriminant is a rational square");
    }

    const Rational& rational_part() const { return a_; }
    const Rational& radical_part() const { return b_; }
    const Rational& discriminant() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    QuadraticNumber conjugate() const { return {a_, -b_, d_}; }

    /// a^2 - D b^2; zero only for the zero element.
    Rational norm() const { return a_ * a_ - d_ * b_ * b_; }

    friend QuadraticNumber operator+(const QuadraticNumber& u, const QuadraticNumber& v) {
        u.check_same(v);
        return {u.a_ + v.a_, u.b_ + v.b_, u.d_};
    }
    friend QuadraticNumber operator-(const QuadraticNumber& u, const QuadraticNumber& v) {
        u.check_same(v);
        return {u.a_ - v.a_, u.b_ - v.b_, u.d_};
    }
    QuadraticNumber operator-() const { return {-a_, -b_, d_}; }
    friend QuadraticNumber operator*(const QuadraticNumber& u, const QuadraticNumber& v) {
        u.check_same(v);
        return {u.a_ * v.a_ + u.d_ * u.b_ * v.b_, u.a_ * v.b_ + u.b_ * v.a_, u.d_};
    }
    QuadraticNumber inverse() const {
        Rational n = norm();
        if (n == 0) throw std::domain_error("QuadraticNumber: division by zero");
        return {a_ / n, -b_ / n, d_};
    }
    friend QuadraticNumber operator/(const QuadraticNumber& u, const QuadraticNumber& v) {
        return u * v.inverse();
    }
    friend bool operator==(const QuadraticNumber& u, const QuadraticNumber& v) {
        return u.a_ == v.a_ && u.b_ == v.b_ && u.d_ == v.d_;
    }

    QuadraticNumber& operator+=(const QuadraticNumber& v) { return *this = *this + v; }
    QuadraticNumber& operator*=(const QuadraticNumber& v) { return *this = *this * v; }

    friend QuadraticNumber operator*(const Rational& s, const QuadraticNumber& v) {
        return {s * v.a_, s * v.b_, v.d_};
    }

    std::string str() const {
        return to_string(a_) + (b_ >= 0 ? "+" : "") + to_string(b_) + "*sqrt(" + to_string(d_) + ")";
    }

private:
    void check_same(const QuadraticNumber& v) const {
        if (d_ != v.d_) throw std::invalid_argument("QuadraticNumber: mixed discriminants");
    }

    Rational a_, b_, d_;
};

} // namespace precur
