#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "faulhaber/exact_arith.hpp"

namespace faulhaber {

/// Square matrix of big integers, row-major, dimension >= 1.
class IntMatrix {
public:
    explicit IntMatrix(std::size_t n);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    std::size_t size() const { return n_; }

    // 0-based access.
    BigInt& operator()(std::size_t r, std::size_t c) { return entries_[r * n_ + c]; }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }

    std::span<const BigInt> row(std::size_t r) const { return {entries_.data() + r * n_, n_}; }
    void swap_rows(std::size_t a, std::size_t b);

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t n_;
    std::vector<BigInt> entries_;
};

/// Exact determinant by fraction-free (Bareiss) elimination with row
/// pivoting on zero pivots.
BigInt det_exact(const IntMatrix& m);

/*
 * k x k system matrix whose determinant gives B_k (k >= 1). In 1-based
 * indices: entry(r, c) = C(r+1, c) for c <= min(r, k-1), zero for
 * r < c <= k-1, and the last column is entry(r, k) = r.
 */
IntMatrix build_matrix_order_k(unsigned long k);

/*
 * (k-1) x (k-1) reduced matrix for k >= 2. In 1-based indices:
 * entry(r, 1) = r, entry(r, c) = C(r+2, c) for 2 <= c <= min(r+1, k-1),
 * zero above that band. Throws DomainError for k < 2.
 */
IntMatrix build_matrix_order_k1(unsigned long k);

/// B_k = (-1)^k det(build_matrix_order_k(k)) / (k+1)!, k >= 1.
Rational bernoulli_from_det_k(unsigned long k);

/// B_k = det(build_matrix_order_k1(k)) / (k+1)!, k >= 2.
Rational bernoulli_from_det_k1(unsigned long k);

}  // namespace faulhaber
