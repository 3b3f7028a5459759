#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "faulhaber/bernoulli.hpp"
#include "faulhaber/polynomial.hpp"

namespace faulhaber {

enum class OutputFormat { plain, latex, json };

std::string_view to_string(OutputFormat f);
std::optional<OutputFormat> parse_format(std::string_view name);

/*
 * Text forms list terms by descending power and skip zero coefficients:
 *   plain  S_2(n) = 1/3 n^3 + 1/2 n^2 + 1/6 n
 *   latex  S_2(n) = \frac{1}{3} n^{3} + \frac{1}{2} n^{2} + \frac{1}{6} n
 */
std::string render_plain(const PowerSumPoly& s);
std::string render_latex(const PowerSumPoly& s);

/// {"k": k, "coefficients": [{"power": p, "num": "..", "den": ".."}, ...]}
/// with one entry per power k+1 down to 1, zeros included.
nlohmann::json to_json(const PowerSumPoly& s);

/// Inverse of to_json. Throws ContractViolation on schema errors or when
/// the coefficients do not form a valid power-sum polynomial.
PowerSumPoly powersum_from_json(const nlohmann::json& j);

std::string render_powersum(const PowerSumPoly& s, OutputFormat format);

/// Plain prints the bare fraction ("-1/30"), latex "B_8 = -\frac{1}{30}",
/// json {"k", "num", "den", "method"}.
std::string render_bernoulli(unsigned long k, const Rational& value, BernMethodId method, OutputFormat format);

}  // namespace faulhaber
