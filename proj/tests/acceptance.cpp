// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. Every comparison is exact; runtime bounds are wall time.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "faulhaber/bernoulli.hpp"
#include "faulhaber/cli.hpp"
#include "faulhaber/determinant.hpp"
#include "faulhaber/powersum_methods.hpp"
#include "oracles.hpp"

using namespace faulhaber;

namespace {

Rational r(long num, long den = 1) { return Rational(BigInt(num), BigInt(den)); }

/// Collects failure notes; a criterion passes when none were recorded.
struct Outcome {
    std::vector<std::string> failures;
    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

struct Criterion {
    int id;
    std::string title;
    double budget_ms;  // <= 0 means no runtime bound
    std::function<void(Outcome&)> body;
};

// 1
void worked_example(Outcome& o) {
    const auto s1 = abramovich_next(PowerSumPoly::base(), 1);
    const auto s2 = abramovich_next(s1, 2);
    o.expect(s1.poly() == Poly{0, r(1, 2), r(1, 2)}, "S_1 != 1/2 n^2 + 1/2 n");
    o.expect(s2.poly() == Poly{0, r(1, 6), r(1, 2), r(1, 3)}, "S_2 != n^3/3 + n^2/2 + n/6");
}

// 2
void five_way_equivalence(Outcome& o) {
    const auto B = bernoulli_recurrence_table(40);
    const auto ref = powersum_table(40, MethodId::abramovich);
    for (const auto m : all_methods) {
        const auto table = powersum_table(40, m, B);
        for (unsigned long k = 0; k <= 40; ++k) {
            o.expect(table[k] == ref[k], std::string(to_string(m)) + " differs at k=" + std::to_string(k));
        }
    }
}

// 3
void oracle_agreement(Outcome& o) {
    const auto table = powersum_table(20, MethodId::abramovich);
    for (unsigned long k = 0; k <= 20; ++k) {
        for (unsigned long n = 1; n <= 200; ++n) {
            if (eval(table[k].poly(), r(static_cast<long>(n))) != Rational(brute_force_sum(k, n))) {
                o.expect(false, "S_" + std::to_string(k) + "(" + std::to_string(n) + ")");
            }
        }
    }
}

// 4
void bernoulli_list(Outcome& o) {
    const auto B = bernoulli_recurrence_table(4);
    o.expect(B[1] == r(-1, 2), "B_1");
    o.expect(B[2] == r(1, 6), "B_2");
    o.expect(B[3] == 0, "B_3");
    o.expect(B[4] == r(-1, 30), "B_4");
}

// 5
void b8_determinant(Outcome& o) {
    const IntMatrix printed = {{1, 3, 0, 0, 0, 0, 0},     {2, 6, 4, 0, 0, 0, 0},     {3, 10, 10, 5, 0, 0, 0},
                               {4, 15, 20, 15, 6, 0, 0},  {5, 21, 35, 35, 21, 7, 0}, {6, 28, 56, 70, 56, 28, 8},
                               {7, 36, 84, 126, 126, 84, 36}};
    const auto built = build_matrix_order_k1(8);
    o.expect(built == printed, "order-(k-1) matrix for k=8 differs from the printed one");
    o.expect(Rational(det_exact(built), factorial(9)) == r(-1, 30), "det / 9! != -1/30");
}

// 6 and 7
std::map<BernMethodId, std::vector<Rational>> all_routes(unsigned long max_k) {
    std::map<BernMethodId, std::vector<Rational>> out;
    const auto sums = powersum_table(max_k, MethodId::abramovich);
    const auto rec = bernoulli_recurrence_table(max_k);
    const auto cramer = bernoulli_cramer_table(max_k);
    for (unsigned long k = 1; k <= max_k; ++k) {
        out[BernMethodId::recurrence].push_back(rec[k]);
        out[BernMethodId::leading_coeff].push_back(bernoulli_from_leading_coeff(k, sums));
        out[BernMethodId::integral].push_back(bernoulli_from_integral(k, sums[k - 1]));
        out[BernMethodId::det_k].push_back(bernoulli_from_det_k(k));
        // det_k1 is defined from k = 2; slot 0 keeps indices aligned.
        out[BernMethodId::det_k1].push_back(k >= 2 ? bernoulli_from_det_k1(k) : rec[1]);
        out[BernMethodId::cramer].push_back(cramer[k]);
    }
    return out;
}

void six_way_agreement(Outcome& o) {
    const auto routes = all_routes(30);
    const auto& ref = routes.at(BernMethodId::recurrence);
    for (const auto& [m, values] : routes) {
        for (unsigned long k = (m == BernMethodId::det_k1 ? 2 : 1); k <= 30; ++k) {
            o.expect(values[k - 1] == ref[k - 1], std::string(to_string(m)) + " B_" + std::to_string(k));
        }
    }
}

void odd_vanishing(Outcome& o) {
    const auto routes = all_routes(29);
    for (const auto& [m, values] : routes) {
        for (unsigned long mm = 1; mm <= 14; ++mm) {
            const unsigned long k = 2 * mm + 1;
            o.expect(values[k - 1].is_zero(), std::string(to_string(m)) + " B_" + std::to_string(k) + " != 0");
        }
    }
}

// 8
void determinant_soundness(Outcome& o) {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    for (int trial = 0; trial < 500; ++trial) {
        const auto m = testing::random_matrix(rng, dim(rng), -9, 9);
        o.expect(det_exact(m) == testing::cofactor_det(testing::to_rows(m)), "cofactor mismatch");

        if (m.size() < 2) continue;
        std::uniform_int_distribution<std::size_t> row(0, m.size() - 1);
        const std::size_t a = row(rng);
        const std::size_t b = (a + 1 + row(rng) % (m.size() - 1)) % m.size();
        auto swapped = m;
        swapped.swap_rows(a, b);
        o.expect(det_exact(swapped) == -det_exact(m), "row swap did not negate");
        auto repeated = m;
        for (std::size_t c = 0; c < m.size(); ++c) repeated(b, c) = repeated(a, c);
        o.expect(det_exact(repeated) == 0, "repeated row gave nonzero determinant");
    }
}

// 9
void loop_closure(Outcome& o) {
    const auto B = bernoulli_recurrence_table(30);
    const auto sums = powersum_table(30, MethodId::abramovich);
    for (unsigned long k = 0; k <= 30; ++k) {
        o.expect(bernoulli_form_poly(k, B) == sums[k], "S_" + std::to_string(k));
    }
}

// 10
void cli_contract(Outcome& o) {
    using namespace faulhaber::cli;
    auto run = [](std::vector<std::string> args) {
        args.insert(args.begin(), "faulhaber");
        return run_cli(args);
    };

    for (unsigned long k = 0; k <= 40; ++k) {
        const auto res = run({"powersum", "-k", std::to_string(k), "--format", "json"});
        const auto parsed = powersum_from_json(nlohmann::json::parse(res.out));
        o.expect(parsed == powersum_table(k, MethodId::abramovich).back(), "json round-trip k=" + std::to_string(k));
    }

    std::ifstream golden(FAULHABER_GOLDEN_DIR "/powersum_k2.tex", std::ios::binary);
    std::ostringstream expected;
    expected << golden.rdbuf();
    o.expect(!expected.str().empty(), "golden file missing");
    o.expect(run({"powersum", "-k", "2", "--format", "latex"}).out == expected.str(), "latex S_2 differs from golden");

    o.expect(run({"verify", "--max-k", "12"}).exit_code == exit_ok, "verify did not exit 0");
    o.expect(run({"verify", "--max-k", "8", "--inject-fault", "4:integration:2"}).exit_code == exit_verify_failed,
             "injected fault did not exit 1");
    o.expect(run({"powersum", "-k", "501"}).exit_code == exit_usage, "over-cap k did not exit 2");
    o.expect(run({"powersum", "-k", "3", "--method", "nope"}).exit_code == exit_usage, "unknown method did not exit 2");
    o.expect(run({"bernoulli", "-k", "1", "--method", "det_k1"}).exit_code == exit_usage,
             "domain mismatch did not exit 2");

    const auto bench = run({"bench", "--max-k", "50", "--json"});
    bool schema_ok = bench.exit_code == exit_ok;
    try {
        const auto rows = nlohmann::json::parse(bench.out);
        schema_ok = schema_ok && rows.is_array() && !rows.empty();
        for (const auto& row : rows) {
            schema_ok = schema_ok && row.size() == 3 && row.at("method").is_string() &&
                        row.at("k").is_number_unsigned() && row.at("nanos").is_number_integer();
        }
    } catch (const std::exception&) {
        schema_ok = false;
    }
    o.expect(schema_ok, "bench JSON schema");
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "worked example S_1, S_2 from the recurrence", 1.0, worked_example},
        {2, "five-way equivalence for k <= 40", 5000.0, five_way_equivalence},
        {3, "oracle agreement k <= 20, n <= 200", 10000.0, oracle_agreement},
        {4, "Bernoulli list B_1..B_4", 1.0, bernoulli_list},
        {5, "B_8 determinant and printed 7x7 matrix", 10.0, b8_determinant},
        {6, "six-way Bernoulli agreement k <= 30", 30000.0, six_way_agreement},
        {7, "odd Bernoulli numbers vanish in every route", 0.0, odd_vanishing},
        {8, "determinant engine soundness", 0.0, determinant_soundness},
        {9, "loop closure through the Bernoulli form k <= 30", 0.0, loop_closure},
        {10, "CLI contract (json, latex golden, exit codes, bench schema)", 0.0, cli_contract},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        Outcome outcome;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(outcome);
        } catch (const std::exception& e) {
            outcome.failures.push_back(std::string("exception: ") + e.what());
        }
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_ms > 0 && ms >= c.budget_ms) {
            outcome.failures.push_back("runtime " + std::to_string(ms) + " ms over budget");
        }
        const bool ok = outcome.failures.empty();
        if (!ok) ++failed;
        std::printf("[%s] AC%-2d %s (%.3f ms", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), ms);
        if (c.budget_ms > 0) std::printf(", budget %.0f ms", c.budget_ms);
        std::printf(")\n");
        for (std::size_t i = 0; i < outcome.failures.size() && i < 5; ++i) {
            std::printf("       - %s\n", outcome.failures[i].c_str());
        }
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
