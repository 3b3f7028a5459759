#include "faulhaber/exact_arith.hpp"

#include <ostream>

namespace faulhaber {

Rational::Rational(const BigInt& num, const BigInt& den) : value_(num, den) {
    if (den == 0) throw DivisionByZero();
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const std::string s(text);
    const auto slash = s.find('/');
    const std::string num_text = s.substr(0, slash);
    const std::string den_text = slash == std::string::npos ? "1" : s.substr(slash + 1);

    auto is_decimal = [](const std::string& t, bool allow_sign) {
        std::size_t i = (allow_sign && !t.empty() && t[0] == '-') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i) {
            if (t[i] < '0' || t[i] > '9') return false;
        }
        return true;
    };
    if (!is_decimal(num_text, true) || !is_decimal(den_text, true)) {
        throw ContractViolation("malformed rational literal: '" + s + "'");
    }
    return Rational(BigInt(num_text, 10), BigInt(den_text, 10));
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str(10);
    return value_.get_str(10);
}

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw DivisionByZero();
    value_ /= rhs.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

BigInt binomial(unsigned long n, unsigned long r) {
    if (r > n) return 0;
    if (r > n - r) r = n - r;
    // Multiplicative formula; each partial product is itself a binomial
    // coefficient, so the division by i is exact.
    BigInt result = 1;
    for (unsigned long i = 1; i <= r; ++i) {
        result *= n - r + i;
        mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), i);
    }
    return result;
}

BigInt factorial(unsigned long n) {
    BigInt result = 1;
    for (unsigned long i = 2; i <= n; ++i) result *= i;
    return result;
}

}  // namespace faulhaber
