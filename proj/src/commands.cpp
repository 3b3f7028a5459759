#include <algorithm>
#include <chrono>
#include <exception>
#include <map>
#include <sstream>
#include <utility>

#include <CLI11.hpp>

#include "faulhaber/cli.hpp"

namespace faulhaber::cli {

namespace {

CommandResult usage_error(std::string message) {
    return {exit_usage, {}, std::move(message) + "\n"};
}

std::optional<CommandResult> check_cap(const char* what, unsigned long value, unsigned long cap) {
    if (value <= cap) return std::nullopt;
    return usage_error(std::string(what) + " = " + std::to_string(value) + " exceeds the cap of " +
                       std::to_string(cap) + " (raise it with --max-cap)");
}

std::vector<PowerSumPoly> build_table(unsigned long max_k, MethodId method) {
    if (method == MethodId::bernoulli_form) {
        return powersum_table(max_k, method, bernoulli_table(max_k, BernMethodId::recurrence));
    }
    return powersum_table(max_k, method);
}

std::vector<Rational> coefficient_vector(const PowerSumPoly& s) {
    std::vector<Rational> a;
    for (std::size_t j = 1; j <= s.k() + 1; ++j) a.push_back(s.a(j));
    return a;
}

std::string power_label(std::size_t power) { return power == 1 ? "n" : "n^" + std::to_string(power); }

/// One named check in the verify report; records only the first failure.
struct Check {
    Check(std::string name, std::string scope) : name(std::move(name)), scope(std::move(scope)) {}

    std::string name;
    std::string scope;
    std::size_t count = 0;
    std::optional<std::string> failure;

    void fail(std::string what) {
        if (!failure) failure = std::move(what);
    }
};

}  // namespace

CommandResult cmd_powersum(unsigned long k, MethodId method, OutputFormat format, unsigned long max_cap) {
    if (auto err = check_cap("k", k, max_cap)) return *err;
    const auto table = build_table(k, method);
    return {exit_ok, render_powersum(table.back(), format) + "\n", {}};
}

CommandResult cmd_table(unsigned long max_k, MethodId method, OutputFormat format, unsigned long max_cap) {
    if (auto err = check_cap("max-k", max_k, max_cap)) return *err;
    const auto table = build_table(max_k, method);
    if (format == OutputFormat::json) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& s : table) rows.push_back(to_json(s));
        return {exit_ok, rows.dump() + "\n", {}};
    }
    std::string out;
    for (const auto& s : table) out += render_powersum(s, format) + "\n";
    return {exit_ok, std::move(out), {}};
}

CommandResult cmd_bernoulli(unsigned long k, BernMethodId method, OutputFormat format, unsigned long max_cap) {
    if (auto err = check_cap("k", k, max_cap)) return *err;
    if (k < min_k(method)) {
        return usage_error("method " + std::string(to_string(method)) + " needs k >= " +
                           std::to_string(min_k(method)) + ", got k = " + std::to_string(k));
    }
    return {exit_ok, render_bernoulli(k, bernoulli_number(k, method), method, format) + "\n", {}};
}

CommandResult cmd_verify(unsigned long max_k, const VerifyOptions& options) {
    if (auto err = check_cap("max-k", max_k, options.max_cap)) return *err;
    const std::string k_range = "k=0.." + std::to_string(max_k);

    // Power-sum tables, one per method.
    std::map<MethodId, std::vector<std::vector<Rational>>> coeffs;
    for (const auto m : all_methods) {
        const auto table = build_table(max_k, m);
        auto& rows = coeffs[m];
        for (const auto& s : table) rows.push_back(coefficient_vector(s));
    }
    if (const auto& f = options.fault; f && f->k <= max_k && f->power >= 1 && f->power <= f->k + 1) {
        coeffs[f->method][f->k][f->power - 1] += Rational(1);
    }

    Check equivalence{"powersum equivalence", k_range + ", 5 methods"};
    const auto& ref = coeffs[MethodId::abramovich];
    for (const auto m : all_methods) {
        if (m == MethodId::abramovich) continue;
        for (unsigned long k = 0; k <= max_k; ++k) {
            ++equivalence.count;
            const auto& got = coeffs[m][k];
            for (std::size_t i = 0; i < got.size(); ++i) {
                if (got[i] != ref[k][i]) {
                    equivalence.fail("k=" + std::to_string(k) + " abramovich vs " + std::string(to_string(m)) +
                                     " differ at coefficient of " + power_label(i + 1) + ": " +
                                     ref[k][i].to_string() + " != " + got[i].to_string());
                    break;
                }
            }
        }
    }

    Check oracle{"oracle agreement", k_range + ", n=1.." + std::to_string(options.oracle_points)};
    for (const auto& [m, rows] : coeffs) {
        for (unsigned long k = 0; k <= max_k && !oracle.failure; ++k) {
            std::vector<Rational> ascending(rows[k].size() + 1);
            std::copy(rows[k].begin(), rows[k].end(), ascending.begin() + 1);
            const Poly s(std::move(ascending));
            BigInt running = 0;
            BigInt term;
            for (unsigned long n = 1; n <= options.oracle_points; ++n) {
                mpz_ui_pow_ui(term.get_mpz_t(), n, k);
                running += term;
                ++oracle.count;
                const Rational value = eval(s, Rational(static_cast<long>(n)));
                if (value != Rational(running)) {
                    oracle.fail(std::string(to_string(m)) + " S_" + std::to_string(k) + "(" + std::to_string(n) +
                                ") = " + value.to_string() + ", direct sum = " + running.get_str());
                    break;
                }
            }
        }
    }

    const unsigned long bern_max = std::min(max_k, options.det_cap);
    const std::string b_range = bern_max >= 1 ? "k=1.." + std::to_string(bern_max) : "none";
    Check bernoulli{"bernoulli agreement", b_range + ", 6 routes"};
    Check closure{"loop closure", bern_max >= 1 ? "k=0.." + std::to_string(bern_max) : "none"};
    if (bern_max >= 1) {
        std::map<BernMethodId, BernoulliTable> tables;
        for (const auto m : all_bern_methods) {
            try {
                tables.emplace(m, bernoulli_table(bern_max, m));
            } catch (const std::exception& e) {
                bernoulli.fail(std::string(to_string(m)) + ": " + e.what());
            }
        }
        if (tables.size() == all_bern_methods.size()) {
            const auto& ref_b = tables.at(BernMethodId::recurrence);
            for (const auto m : all_bern_methods) {
                if (m == BernMethodId::recurrence) continue;
                for (unsigned long k = std::max(1UL, min_k(m)); k <= bern_max; ++k) {
                    ++bernoulli.count;
                    if (tables.at(m)[k] != ref_b[k]) {
                        bernoulli.fail("B_" + std::to_string(k) + " recurrence vs " + std::string(to_string(m)) +
                                       ": " + ref_b[k].to_string() + " != " + tables.at(m)[k].to_string());
                    }
                }
            }
            for (const auto& [m, table] : tables) {
                for (unsigned long k = 0; k <= bern_max; ++k) {
                    ++closure.count;
                    if (coefficient_vector(bernoulli_form_poly(k, table)) != ref[k]) {
                        closure.fail(std::string(to_string(m)) + " table through the Bernoulli form differs at S_" +
                                     std::to_string(k));
                    }
                }
            }
        }
    }

    CommandResult result;
    std::ostringstream report;
    const Check* first_failure = nullptr;
    for (const Check* c : {&equivalence, &oracle, &bernoulli, &closure}) {
        report << c->name << ": " << c->scope << ", " << c->count << " checks: ";
        if (c->failure) {
            report << "FAILED (" << *c->failure << ")\n";
            if (!first_failure) first_failure = c;
        } else {
            report << "ok\n";
        }
    }
    if (first_failure) {
        report << "verification failed: " << first_failure->name << ": " << *first_failure->failure << "\n";
        result.exit_code = exit_verify_failed;
        result.err = "first mismatch: " + *first_failure->failure + "\n";
    } else {
        report << "all checks passed\n";
    }
    result.out = report.str();
    return result;
}

CommandResult cmd_bench(unsigned long max_k, bool json, unsigned long max_cap) {
    if (auto err = check_cap("max-k", max_k, max_cap)) return *err;
    using clock = std::chrono::steady_clock;
    struct Row {
        std::string method;
        unsigned long k;
        long long nanos;
    };
    std::vector<Row> rows;
    auto time = [](auto&& fn) {
        const auto start = clock::now();
        fn();
        return std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - start).count();
    };

    const BernoulliTable B = bernoulli_table(max_k, BernMethodId::recurrence);
    for (const auto m : all_methods) {
        PowerSumPoly prev = PowerSumPoly::base();
        for (unsigned long k = 1; k <= max_k; ++k) {
            std::optional<PowerSumPoly> next;
            const auto nanos = time([&] {
                next = m == MethodId::bernoulli_form ? bernoulli_form_poly(k, B) : next_power_sum(prev, m);
            });
            rows.push_back({std::string(to_string(m)), k, nanos});
            prev = std::move(*next);
        }
    }
    for (const auto m : all_bern_methods) {
        for (unsigned long k = std::max(1UL, min_k(m)); k <= max_k; ++k) {
            const auto nanos = time([&] { (void)bernoulli_number(k, m); });
            rows.push_back({std::string(to_string(m)), k, nanos});
        }
    }

    std::ostringstream out;
    if (json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows) arr.push_back({{"method", r.method}, {"k", r.k}, {"nanos", r.nanos}});
        out << arr.dump() << "\n";
    } else {
        out << "method            k        nanos\n";
        for (const auto& r : rows) {
            std::string method = r.method;
            method.resize(std::max<std::size_t>(method.size(), 16), ' ');
            out << method << "  " << r.k << "  " << r.nanos << "\n";
        }
    }
    return {exit_ok, out.str(), {}};
}

CommandResult run_cli(const std::vector<std::string>& args) {
    CLI::App app{"Exact power-sum polynomials and Bernoulli numbers", "faulhaber"};
    app.require_subcommand(1);

    unsigned long k = 0;
    unsigned long max_k = 0;
    unsigned long max_cap = default_max_cap;
    unsigned long det_cap = default_det_cap;
    unsigned long oracle_points = VerifyOptions{}.oracle_points;
    std::string method_name;
    std::string format_name = "plain";
    std::string fault_spec;
    bool json = false;

    std::map<std::string, MethodId> method_map;
    for (const auto m : all_methods) method_map.emplace(to_string(m), m);
    std::map<std::string, BernMethodId> bern_map;
    for (const auto m : all_bern_methods) bern_map.emplace(to_string(m), m);
    const std::map<std::string, OutputFormat> format_map = {
        {"plain", OutputFormat::plain}, {"latex", OutputFormat::latex}, {"json", OutputFormat::json}};

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format_name, "plain, latex or json")
            ->check(CLI::IsMember(format_map))
            ->capture_default_str();
    };
    auto add_cap = [&](CLI::App* sub) {
        sub->add_option("--max-cap", max_cap, "largest k accepted")->capture_default_str();
    };

    auto* powersum = app.add_subcommand("powersum", "print the coefficients of S_k(n)");
    powersum->add_option("-k,--k", k, "power-sum exponent")->required();
    powersum->add_option("--method", method_name, "construction method (default abramovich)")
        ->check(CLI::IsMember(method_map));
    add_format(powersum);
    add_cap(powersum);

    auto* table = app.add_subcommand("table", "print S_0 .. S_max_k");
    table->add_option("--max-k", max_k, "largest exponent")->required();
    table->add_option("--method", method_name, "construction method (default abramovich)")
        ->check(CLI::IsMember(method_map));
    add_format(table);
    add_cap(table);

    auto* bernoulli = app.add_subcommand("bernoulli", "print the Bernoulli number B_k");
    bernoulli->add_option("-k,--k", k, "index")->required();
    bernoulli->add_option("--method", method_name, "computation route (default recurrence)")
        ->check(CLI::IsMember(bern_map));
    add_format(bernoulli);
    add_cap(bernoulli);

    auto* verify = app.add_subcommand("verify", "cross-check every method against the others and direct sums");
    verify->add_option("--max-k", max_k, "largest exponent")->required();
    verify->add_option("--det-cap", det_cap, "largest k for the Bernoulli routes")->capture_default_str();
    verify->add_option("--oracle-points", oracle_points, "direct-sum evaluation points per S_k")
        ->capture_default_str();
    verify->add_option("--inject-fault", fault_spec, "test hook: K:METHOD:POWER perturbs one coefficient")
        ->group("");
    add_cap(verify);

    auto* bench = app.add_subcommand("bench", "time each method per k");
    bench->add_option("--max-k", max_k, "largest exponent")->required();
    bench->add_flag("--json", json, "emit JSON rows");
    add_cap(bench);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = app.exit(e, out, err);
        return {code == 0 ? exit_ok : exit_usage, out.str(), err.str()};
    }

    const OutputFormat format = format_map.at(format_name);
    try {
        if (powersum->parsed()) {
            return cmd_powersum(k, method_name.empty() ? MethodId::abramovich : method_map.at(method_name), format,
                                max_cap);
        }
        if (table->parsed()) {
            return cmd_table(max_k, method_name.empty() ? MethodId::abramovich : method_map.at(method_name), format,
                             max_cap);
        }
        if (bernoulli->parsed()) {
            return cmd_bernoulli(k, method_name.empty() ? BernMethodId::recurrence : bern_map.at(method_name), format,
                                 max_cap);
        }
        if (verify->parsed()) {
            VerifyOptions options;
            options.det_cap = det_cap;
            options.oracle_points = oracle_points;
            options.max_cap = max_cap;
            if (!fault_spec.empty()) {
                const auto c1 = fault_spec.find(':');
                const auto c2 = fault_spec.find(':', c1 == std::string::npos ? c1 : c1 + 1);
                if (c1 == std::string::npos || c2 == std::string::npos) {
                    return usage_error("--inject-fault expects K:METHOD:POWER");
                }
                const auto m = parse_method(fault_spec.substr(c1 + 1, c2 - c1 - 1));
                if (!m) return usage_error("--inject-fault: unknown method");
                try {
                    options.fault = InjectedFault{std::stoul(fault_spec.substr(0, c1)), *m,
                                                  std::stoul(fault_spec.substr(c2 + 1))};
                } catch (const std::exception&) {
                    return usage_error("--inject-fault expects K:METHOD:POWER");
                }
            }
            return cmd_verify(max_k, options);
        }
        if (bench->parsed()) return cmd_bench(max_k, json, max_cap);
    } catch (const DomainError& e) {
        return usage_error(e.what());
    }
    return usage_error("no subcommand given");
}

}  // namespace faulhaber::cli
