#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "faulhaber/bernoulli_table.hpp"
#include "faulhaber/exact_arith.hpp"
#include "faulhaber/polynomial.hpp"

namespace faulhaber {

/// The interchangeable routes to S_k.
enum class MethodId { abramovich, integration, bloom_owens, budin_cantor, bernoulli_form };

inline constexpr std::array<MethodId, 5> all_methods = {
    MethodId::abramovich, MethodId::integration, MethodId::bloom_owens,
    MethodId::budin_cantor, MethodId::bernoulli_form};

std::string_view to_string(MethodId m);
/// Inverse of to_string; nullopt for unknown names.
std::optional<MethodId> parse_method(std::string_view name);

// Single steps S_{k-1} -> S_k. Each throws ContractViolation when prev.k() != k-1.

/// S_k = x + k * star(S_{k-1}).
PowerSumPoly abramovich_next(const PowerSumPoly& prev, unsigned long k);

/// S_k = k * int_0^x S_{k-1} + (1 - k * int_0^1 S_{k-1}) * x.
PowerSumPoly integration_next(const PowerSumPoly& prev, unsigned long k);

/// a_{k,j} = (k/j) a_{k-1,j-1} for j >= 2, then a_{k,1} from S_k(1) = 1.
/// Works on the coefficient vector alone.
PowerSumPoly bloom_owens_next(const PowerSumPoly& prev, unsigned long k);

/*
 * S_k -> S_{k+1} in the leading-term-first indexing: with
 * S_k = b_1 n^{k+1} + ... + b_{k+1} n, the coefficient of n^{k+3-i} in
 * S_{k+1} is (k+1)/(k+3-i) * b_i and the linear coefficient is
 * 1 - (k+1) * sum_i b_i/(k+3-i). Defined for k >= 0; prev.k() must equal k.
 */
PowerSumPoly budin_cantor_next(const PowerSumPoly& prev, unsigned long k);

/// a_{k,j} = (-1)^{k+1-j}/(k+1) * C(k+1, j) * B_{k+1-j}. Needs B_0..B_k.
PowerSumPoly bernoulli_form_poly(unsigned long k, const BernoulliTable& B);

/// 1^k + 2^k + ... + n^k by direct summation.
BigInt brute_force_sum(unsigned long k, unsigned long n);

/// Advances prev (exponent k-1) to exponent k with the chosen recurrence.
/// bernoulli_form is not a single-step method and is rejected here.
PowerSumPoly next_power_sum(const PowerSumPoly& prev, MethodId method);

/// [S_0, ..., S_max_k]. The bernoulli_form method reads its coefficients
/// from B, which must then hold B_0..B_max_k.
std::vector<PowerSumPoly> powersum_table(unsigned long max_k, MethodId method,
                                         const std::optional<BernoulliTable>& B = std::nullopt);

}  // namespace faulhaber
