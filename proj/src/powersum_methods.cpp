#include "faulhaber/powersum_methods.hpp"

#include <string>
#include <utility>

namespace faulhaber {

namespace {

void require_exponent(const PowerSumPoly& prev, unsigned long expected, const char* method) {
    if (prev.k() != expected) {
        throw ContractViolation(std::string(method) + ": expected S_" + std::to_string(expected) +
                                ", got S_" + std::to_string(prev.k()));
    }
}

void require_step(const PowerSumPoly& prev, unsigned long k, const char* method) {
    if (k == 0) throw ContractViolation(std::string(method) + ": k must be positive");
    require_exponent(prev, k - 1, method);
}

Rational rat(unsigned long v) { return Rational(static_cast<long>(v)); }

}  // namespace

std::string_view to_string(MethodId m) {
    switch (m) {
        case MethodId::abramovich: return "abramovich";
        case MethodId::integration: return "integration";
        case MethodId::bloom_owens: return "bloom_owens";
        case MethodId::budin_cantor: return "budin_cantor";
        case MethodId::bernoulli_form: return "bernoulli_form";
    }
    return "?";
}

std::optional<MethodId> parse_method(std::string_view name) {
    for (const auto m : all_methods) {
        if (to_string(m) == name) return m;
    }
    return std::nullopt;
}

PowerSumPoly abramovich_next(const PowerSumPoly& prev, unsigned long k) {
    require_step(prev, k, "abramovich");
    Poly next = rat(k) * star_transform(prev);
    next += Poly::monomial(1, 1);
    return PowerSumPoly(k, std::move(next));
}

PowerSumPoly integration_next(const PowerSumPoly& prev, unsigned long k) {
    require_step(prev, k, "integration");
    const Poly integral = antiderivative(prev.poly());
    const Rational over_unit = eval(integral, 1);
    Poly next = rat(k) * integral;
    next += Poly::monomial(Rational(1) - rat(k) * over_unit, 1);
    return PowerSumPoly(k, std::move(next));
}

PowerSumPoly bloom_owens_next(const PowerSumPoly& prev, unsigned long k) {
    require_step(prev, k, "bloom_owens");
    std::vector<Rational> a(k + 2);
    Rational tail;
    for (unsigned long j = 2; j <= k + 1; ++j) {
        a[j] = rat(k) / rat(j) * prev.a(j - 1);
        tail += a[j];
    }
    a[1] = Rational(1) - tail;
    return PowerSumPoly(k, Poly(std::move(a)));
}

PowerSumPoly budin_cantor_next(const PowerSumPoly& prev, unsigned long k) {
    require_exponent(prev, k, "budin_cantor");
    const Rational kp1 = rat(k + 1);
    std::vector<Rational> out(k + 3);
    Rational weighted;
    for (unsigned long i = 1; i <= k + 1; ++i) {
        const Rational b = prev.b(i);
        const Rational divisor = rat(k + 3 - i);
        out[k + 3 - i] = kp1 / divisor * b;
        weighted += b / divisor;
    }
    out[1] = Rational(1) - kp1 * weighted;
    return PowerSumPoly(k + 1, Poly(std::move(out)));
}

PowerSumPoly bernoulli_form_poly(unsigned long k, const BernoulliTable& B) {
    if (B.size() < k + 1) {
        throw ContractViolation("bernoulli_form: need B_0..B_" + std::to_string(k) + ", table holds " +
                                std::to_string(B.size()) + " values");
    }
    const Rational scale = Rational(1) / rat(k + 1);
    std::vector<Rational> a(k + 2);
    for (unsigned long j = 1; j <= k + 1; ++j) {
        a[j] = Rational(sign_power(k + 1 - j)) * scale * Rational(binomial(k + 1, j)) * B[k + 1 - j];
    }
    return PowerSumPoly(k, Poly(std::move(a)));
}

BigInt brute_force_sum(unsigned long k, unsigned long n) {
    BigInt sum = 0;
    BigInt term;
    for (unsigned long i = 1; i <= n; ++i) {
        mpz_ui_pow_ui(term.get_mpz_t(), i, k);
        sum += term;
    }
    return sum;
}

PowerSumPoly next_power_sum(const PowerSumPoly& prev, MethodId method) {
    const unsigned long k = prev.k() + 1;
    switch (method) {
        case MethodId::abramovich: return abramovich_next(prev, k);
        case MethodId::integration: return integration_next(prev, k);
        case MethodId::bloom_owens: return bloom_owens_next(prev, k);
        case MethodId::budin_cantor: return budin_cantor_next(prev, prev.k());
        case MethodId::bernoulli_form: break;
    }
    throw ContractViolation("bernoulli_form has no single-step form");
}

std::vector<PowerSumPoly> powersum_table(unsigned long max_k, MethodId method,
                                         const std::optional<BernoulliTable>& B) {
    std::vector<PowerSumPoly> table;
    table.reserve(max_k + 1);
    if (method == MethodId::bernoulli_form) {
        if (!B) throw ContractViolation("bernoulli_form needs a Bernoulli table");
        if (B->size() < max_k + 1) {
            throw ContractViolation("bernoulli_form: table too short for max_k = " + std::to_string(max_k));
        }
        for (unsigned long k = 0; k <= max_k; ++k) table.push_back(bernoulli_form_poly(k, *B));
        return table;
    }
    table.push_back(PowerSumPoly::base());
    for (unsigned long k = 1; k <= max_k; ++k) table.push_back(next_power_sum(table.back(), method));
    return table;
}

}  // namespace faulhaber
