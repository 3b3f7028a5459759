#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "faulhaber/bernoulli_table.hpp"
#include "faulhaber/determinant.hpp"
#include "faulhaber/exact_arith.hpp"
#include "faulhaber/polynomial.hpp"

namespace faulhaber {

/// Independent routes to the Bernoulli numbers.
enum class BernMethodId { recurrence, leading_coeff, integral, det_k, det_k1, cramer };

inline constexpr std::array<BernMethodId, 6> all_bern_methods = {
    BernMethodId::recurrence, BernMethodId::leading_coeff, BernMethodId::integral,
    BernMethodId::det_k,      BernMethodId::det_k1,        BernMethodId::cramer};

std::string_view to_string(BernMethodId m);
std::optional<BernMethodId> parse_bern_method(std::string_view name);

/// Smallest k the method can produce on its own.
unsigned long min_k(BernMethodId m);

/*
 * Reference pipeline. Seeds B_0 = 1 and solves
 *   sum_{j=1}^{k} (-1)^j C(k+1, j) B_j = k
 * for B_k given B_1..B_{k-1}, for k = 1..max_k. Requires max_k >= 1.
 */
BernoulliTable bernoulli_recurrence_table(unsigned long max_k);

/// B_k = (-1)^k a_{k,1}, reading S_k out of table.
Rational bernoulli_from_leading_coeff(unsigned long k, std::span<const PowerSumPoly> table);

/// B_k = (-1)^k (1 - k int_0^1 S_{k-1}(t) dt); prev must be S_{k-1}, k >= 1.
Rational bernoulli_from_integral(unsigned long k, const PowerSumPoly& prev);

/// The recurrence above as a max_k x max_k integer system A B = rhs in
/// the unknowns B_1..B_max_k. Row k (1-based) holds (-1)^j C(k+1, j) in
/// column j <= k and k on the right-hand side.
struct LinearSystem {
    IntMatrix matrix;
    std::vector<BigInt> rhs;
};
LinearSystem bernoulli_system(unsigned long max_k);

/// Solves A x = rhs by Cramer's rule, one determinant ratio per unknown.
/// Throws ContractViolation if A is singular.
std::vector<Rational> cramer_solve(const LinearSystem& system);

/// B_1..B_max_k via cramer_solve, with B_0 = 1 prepended. max_k >= 1.
BernoulliTable bernoulli_cramer_table(unsigned long max_k);

/// Just B_k from the order-k system (two determinants), k >= 1.
Rational bernoulli_cramer(unsigned long k);

/// B_k via one chosen route; DomainError when k < min_k(method).
Rational bernoulli_number(unsigned long k, BernMethodId method);

/*
 * B_0..B_max_k where every entry from min_k(method) upward comes from the
 * chosen route. Entries below min_k are the conventions B_0 = 1 and
 * B_1 = -1/2.
 */
BernoulliTable bernoulli_table(unsigned long max_k, BernMethodId method);

}  // namespace faulhaber
