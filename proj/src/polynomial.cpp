#include "faulhaber/polynomial.hpp"

#include <string>
#include <utility>

namespace faulhaber {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rational& c, std::size_t power) {
    std::vector<Rational> coeffs(power + 1);
    coeffs[power] = c;
    return Poly(std::move(coeffs));
}

Rational Poly::coeff(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : Rational();
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& scale) {
    for (auto& c : coeffs_) c *= scale;
    trim();
    return *this;
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational eval(const Poly& p, const Rational& x) {
    const auto c = p.coeffs();
    Rational acc;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Poly antiderivative(const Poly& p) {
    const auto c = p.coeffs();
    if (c.empty()) return {};
    std::vector<Rational> out(c.size() + 1);
    for (std::size_t j = 0; j < c.size(); ++j) {
        out[j + 1] = c[j] / Rational(static_cast<long>(j + 1));
    }
    return Poly(std::move(out));
}

PowerSumPoly::PowerSumPoly(unsigned long k, Poly poly) : k_(k), poly_(std::move(poly)) {
    const std::string tag = "S_" + std::to_string(k) + ": ";
    if (poly_.degree() != static_cast<long>(k) + 1) {
        throw ContractViolation(tag + "degree must be k+1, got " + std::to_string(poly_.degree()));
    }
    if (!poly_.coeff(0).is_zero()) throw ContractViolation(tag + "constant term must be zero");
    Rational sum;
    for (const auto& c : poly_.coeffs()) sum += c;
    if (sum != Rational(1)) throw ContractViolation(tag + "coefficients must sum to 1, got " + sum.to_string());
}

PowerSumPoly PowerSumPoly::base() { return PowerSumPoly(0, Poly::monomial(1, 1)); }

Rational PowerSumPoly::b(std::size_t i) const {
    if (i < 1 || i > k_ + 1) throw ContractViolation("descending index out of range");
    return a(k_ + 2 - i);
}

Poly star_transform(const PowerSumPoly& p) {
    std::vector<Rational> out(p.k() + 3);
    for (std::size_t j = 1; j <= p.k() + 1; ++j) {
        const Rational term = p.a(j) / Rational(static_cast<long>(j + 1));
        out[j + 1] += term;
        out[1] -= term;
    }
    return Poly(std::move(out));
}

}  // namespace faulhaber
