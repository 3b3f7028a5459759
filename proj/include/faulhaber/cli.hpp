#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "faulhaber/bernoulli.hpp"
#include "faulhaber/powersum_methods.hpp"
#include "faulhaber/render.hpp"

namespace faulhaber::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_verify_failed = 1;
inline constexpr int exit_usage = 2;

inline constexpr unsigned long default_max_cap = 500;
inline constexpr unsigned long default_det_cap = 30;

/// Output of one command: what goes to stdout, stderr, and the exit code.
struct CommandResult {
    int exit_code = exit_ok;
    std::string out;
    std::string err;
};

CommandResult cmd_powersum(unsigned long k, MethodId method, OutputFormat format,
                           unsigned long max_cap = default_max_cap);

/// Prints S_0..S_max_k, one per line (json: a single array).
CommandResult cmd_table(unsigned long max_k, MethodId method, OutputFormat format,
                        unsigned long max_cap = default_max_cap);

CommandResult cmd_bernoulli(unsigned long k, BernMethodId method, OutputFormat format,
                            unsigned long max_cap = default_max_cap);

/// Test hook for cmd_verify: perturbs one coefficient of one method's S_k
/// before comparison, so the mismatch path can be exercised.
struct InjectedFault {
    unsigned long k = 0;
    MethodId method = MethodId::abramovich;
    std::size_t power = 1;
};

struct VerifyOptions {
    unsigned long det_cap = default_det_cap;
    /// Evaluation points n = 1..oracle_points for the brute-force check.
    unsigned long oracle_points = 100;
    unsigned long max_cap = default_max_cap;
    std::optional<InjectedFault> fault;
};

/*
 * Runs the equivalence harness up to max_k:
 *   - the five power-sum methods agree coefficient for coefficient,
 *   - every S_k matches brute-force summation at n = 1..oracle_points,
 *   - the six Bernoulli routes agree for 1 <= k <= min(max_k, det_cap),
 *   - plugging each route's table into the Bernoulli form gives S_k back.
 * Exit 0 when everything passes, 1 with the first mismatch otherwise.
 */
CommandResult cmd_verify(unsigned long max_k, const VerifyOptions& options = {});

/// Wall time per method per k. JSON rows are {"method", "k", "nanos"};
/// det_k1 starts at k = 2.
CommandResult cmd_bench(unsigned long max_k, bool json, unsigned long max_cap = default_max_cap);

/// Parses argv (argv[0] is the program name) and dispatches.
CommandResult run_cli(const std::vector<std::string>& args);

}  // namespace faulhaber::cli
