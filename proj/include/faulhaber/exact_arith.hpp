#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace faulhaber {

using BigInt = mpz_class;

/// Raised when a caller breaks a documented precondition (exponent
/// bookkeeping, table lengths, malformed inputs).
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Raised when an argument lies outside the domain of a formula, e.g. the
/// reduced determinant for k < 2.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class DivisionByZero : public std::domain_error {
public:
    DivisionByZero() : std::domain_error("rational division by zero") {}
};

/*
 * Exact fraction num/den kept in lowest terms with den > 0 at all times.
 * Zero is 0/1. Every constructor canonicalizes, so operator== is plain
 * structural equality of (num, den).
 */
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& num, const BigInt& den);

    /// Parses "p", "-p" or "p/q" in base 10.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// "p" when the denominator is 1, otherwise "p/q".
    std::string to_string() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// C(n, r), zero when r > n.
BigInt binomial(unsigned long n, unsigned long r);

BigInt factorial(unsigned long n);

/// (-1)^e as +1 or -1.
constexpr long sign_power(unsigned long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace faulhaber
