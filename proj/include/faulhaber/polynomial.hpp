#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "faulhaber/exact_arith.hpp"

namespace faulhaber {

/*
 * Dense univariate polynomial over Rational, coefficients stored by
 * ascending power. The highest stored coefficient is never zero; the zero
 * polynomial has no coefficients at all.
 */
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    Poly(std::initializer_list<Rational> coeffs) : Poly(std::vector<Rational>(coeffs)) {}

    /// c * x^power
    static Poly monomial(const Rational& c, std::size_t power);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the polynomial; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    /// Coefficient of x^power (zero beyond the degree).
    Rational coeff(std::size_t power) const;
    std::span<const Rational> coeffs() const { return coeffs_; }

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Rational& scale);

    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(const Rational& scale, Poly p) { return p *= scale; }

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

/// Value of p at x by Horner's scheme.
Rational eval(const Poly& p, const Rational& x);

/// Integral of p from 0 to x, as a polynomial in x.
Poly antiderivative(const Poly& p);

/*
 * The polynomial S_k(x) = 1^k + 2^k + ... + x^k for integer x. Construction
 * enforces the structural facts every power-sum polynomial has: degree k+1,
 * zero constant term and coefficient sum S_k(1) = 1.
 */
class PowerSumPoly {
public:
    PowerSumPoly(unsigned long k, Poly poly);

    /// S_0(x) = x.
    static PowerSumPoly base();

    unsigned long k() const { return k_; }
    const Poly& poly() const { return poly_; }

    /// a_{k,j}, the coefficient of n^j (j = 0..k+1; j = 0 is always zero).
    Rational a(std::size_t j) const { return poly_.coeff(j); }

    /// b_i = a_{k,k+2-i} for i = 1..k+1, the leading-term-first view.
    Rational b(std::size_t i) const;

    friend bool operator==(const PowerSumPoly&, const PowerSumPoly&) = default;

private:
    unsigned long k_;
    Poly poly_;
};

/*
 * Replaces every term a_j x^j of p with a_j (x^{j+1} - x) / (j+1). The result
 * has degree k+2 and vanishes at both x = 0 and x = 1.
 */
Poly star_transform(const PowerSumPoly& p);

}  // namespace faulhaber
