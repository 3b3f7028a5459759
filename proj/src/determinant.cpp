#include "faulhaber/determinant.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace faulhaber {

IntMatrix::IntMatrix(std::size_t n) : n_(n), entries_(n * n) {
    if (n == 0) throw ContractViolation("IntMatrix dimension must be at least 1");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) : IntMatrix(rows.size()) {
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != n_) throw ContractViolation("IntMatrix rows must all have length " + std::to_string(n_));
        std::size_t c = 0;
        for (long v : row) (*this)(r, c++) = v;
        ++r;
    }
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < n_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

BigInt det_exact(const IntMatrix& m) {
    IntMatrix a = m;
    const std::size_t n = a.size();
    BigInt prev_pivot = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && a(r, k) == 0) ++r;
            if (r == n) return 0;
            a.swap_rows(k, r);
            sign = -sign;
        }
        // Sylvester's identity makes each quotient exact.
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev_pivot.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev_pivot = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

IntMatrix build_matrix_order_k(unsigned long k) {
    if (k < 1) throw DomainError("order-k Bernoulli matrix needs k >= 1");
    IntMatrix m(k);
    for (unsigned long r = 1; r <= k; ++r) {
        for (unsigned long c = 1; c <= std::min(r, k - 1); ++c) m(r - 1, c - 1) = binomial(r + 1, c);
        m(r - 1, k - 1) = r;
    }
    return m;
}

IntMatrix build_matrix_order_k1(unsigned long k) {
    if (k < 2) throw DomainError("order-(k-1) Bernoulli matrix needs k >= 2, got k = " + std::to_string(k));
    const unsigned long n = k - 1;
    IntMatrix m(n);
    for (unsigned long r = 1; r <= n; ++r) {
        m(r - 1, 0) = r;
        for (unsigned long c = 2; c <= std::min(r + 1, n); ++c) m(r - 1, c - 1) = binomial(r + 2, c);
    }
    return m;
}

Rational bernoulli_from_det_k(unsigned long k) {
    const BigInt det = det_exact(build_matrix_order_k(k));
    return Rational(BigInt(sign_power(k) * det), factorial(k + 1));
}

Rational bernoulli_from_det_k1(unsigned long k) {
    const BigInt det = det_exact(build_matrix_order_k1(k));
    return Rational(det, factorial(k + 1));
}

}  // namespace faulhaber
