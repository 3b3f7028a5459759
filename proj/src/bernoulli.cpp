#include "faulhaber/bernoulli.hpp"

#include <string>
#include <utility>

#include "faulhaber/powersum_methods.hpp"

namespace faulhaber {

namespace {

Rational rat(unsigned long v) { return Rational(static_cast<long>(v)); }

const Rational& minus_half() {
    static const Rational value(-1, 2);
    return value;
}

}  // namespace

BernoulliTable::BernoulliTable(std::vector<Rational> values) : values_(std::move(values)) {
    if (values_.empty()) throw ContractViolation("Bernoulli table must hold at least B_0");
    if (values_[0] != Rational(1)) throw ContractViolation("B_0 must be 1, got " + values_[0].to_string());
    if (values_.size() > 1 && values_[1] != minus_half()) {
        throw ContractViolation("B_1 must be -1/2, got " + values_[1].to_string());
    }
    for (std::size_t m = 3; m < values_.size(); m += 2) {
        if (!values_[m].is_zero()) {
            throw ContractViolation("B_" + std::to_string(m) + " must vanish, got " + values_[m].to_string());
        }
    }
}

std::string_view to_string(BernMethodId m) {
    switch (m) {
        case BernMethodId::recurrence: return "recurrence";
        case BernMethodId::leading_coeff: return "leading_coeff";
        case BernMethodId::integral: return "integral";
        case BernMethodId::det_k: return "det_k";
        case BernMethodId::det_k1: return "det_k1";
        case BernMethodId::cramer: return "cramer";
    }
    return "?";
}

std::optional<BernMethodId> parse_bern_method(std::string_view name) {
    for (const auto m : all_bern_methods) {
        if (to_string(m) == name) return m;
    }
    return std::nullopt;
}

unsigned long min_k(BernMethodId m) {
    switch (m) {
        case BernMethodId::recurrence:
        case BernMethodId::leading_coeff: return 0;
        case BernMethodId::integral:
        case BernMethodId::det_k:
        case BernMethodId::cramer: return 1;
        case BernMethodId::det_k1: return 2;
    }
    return 0;
}

BernoulliTable bernoulli_recurrence_table(unsigned long max_k) {
    if (max_k < 1) throw ContractViolation("recurrence table needs max_k >= 1");
    std::vector<Rational> B;
    B.reserve(max_k + 1);
    B.emplace_back(1);
    for (unsigned long k = 1; k <= max_k; ++k) {
        Rational rest;
        for (unsigned long j = 1; j < k; ++j) rest += Rational(sign_power(j)) * Rational(binomial(k + 1, j)) * B[j];
        // The j = k term carries (-1)^k C(k+1, k) = (-1)^k (k+1).
        B.push_back((rat(k) - rest) / Rational(sign_power(k) * static_cast<long>(k + 1)));
    }
    return BernoulliTable(std::move(B));
}

Rational bernoulli_from_leading_coeff(unsigned long k, std::span<const PowerSumPoly> table) {
    if (table.size() <= k) {
        throw ContractViolation("leading_coeff: table holds " + std::to_string(table.size()) +
                                " polynomials, need S_" + std::to_string(k));
    }
    const PowerSumPoly& s = table[k];
    if (s.k() != k) throw ContractViolation("leading_coeff: table[" + std::to_string(k) + "] is not S_k");
    return Rational(sign_power(k)) * s.a(1);
}

Rational bernoulli_from_integral(unsigned long k, const PowerSumPoly& prev) {
    if (k < 1) throw DomainError("integral route needs k >= 1");
    if (prev.k() != k - 1) {
        throw ContractViolation("integral: expected S_" + std::to_string(k - 1) + ", got S_" + std::to_string(prev.k()));
    }
    const Rational area = eval(antiderivative(prev.poly()), 1);
    return Rational(sign_power(k)) * (Rational(1) - rat(k) * area);
}

LinearSystem bernoulli_system(unsigned long max_k) {
    if (max_k < 1) throw ContractViolation("Bernoulli system needs max_k >= 1");
    LinearSystem sys{IntMatrix(max_k), std::vector<BigInt>(max_k)};
    for (unsigned long k = 1; k <= max_k; ++k) {
        for (unsigned long j = 1; j <= k; ++j) sys.matrix(k - 1, j - 1) = sign_power(j) * binomial(k + 1, j);
        sys.rhs[k - 1] = k;
    }
    return sys;
}

std::vector<Rational> cramer_solve(const LinearSystem& system) {
    const std::size_t n = system.matrix.size();
    if (system.rhs.size() != n) throw ContractViolation("cramer: right-hand side length mismatch");
    const BigInt denom = det_exact(system.matrix);
    if (denom == 0) throw ContractViolation("cramer: singular system");
    std::vector<Rational> x;
    x.reserve(n);
    for (std::size_t col = 0; col < n; ++col) {
        IntMatrix replaced = system.matrix;
        for (std::size_t r = 0; r < n; ++r) replaced(r, col) = system.rhs[r];
        x.emplace_back(det_exact(replaced), denom);
    }
    return x;
}

BernoulliTable bernoulli_cramer_table(unsigned long max_k) {
    std::vector<Rational> B = cramer_solve(bernoulli_system(max_k));
    B.insert(B.begin(), Rational(1));
    return BernoulliTable(std::move(B));
}

Rational bernoulli_cramer(unsigned long k) {
    if (k < 1) throw DomainError("cramer route needs k >= 1");
    const LinearSystem sys = bernoulli_system(k);
    const BigInt denom = det_exact(sys.matrix);
    if (denom == 0) throw ContractViolation("cramer: singular system");
    IntMatrix replaced = sys.matrix;
    for (std::size_t r = 0; r < k; ++r) replaced(r, k - 1) = sys.rhs[r];
    return Rational(det_exact(replaced), denom);
}

Rational bernoulli_number(unsigned long k, BernMethodId method) {
    if (k < min_k(method)) {
        throw DomainError(std::string(to_string(method)) + " route needs k >= " + std::to_string(min_k(method)) +
                          ", got k = " + std::to_string(k));
    }
    switch (method) {
        case BernMethodId::recurrence: return k == 0 ? Rational(1) : bernoulli_recurrence_table(k)[k];
        case BernMethodId::leading_coeff: return bernoulli_from_leading_coeff(k, powersum_table(k, MethodId::abramovich));
        case BernMethodId::integral:
            return bernoulli_from_integral(k, powersum_table(k - 1, MethodId::abramovich).back());
        case BernMethodId::det_k: return bernoulli_from_det_k(k);
        case BernMethodId::det_k1: return bernoulli_from_det_k1(k);
        case BernMethodId::cramer: return bernoulli_cramer(k);
    }
    throw ContractViolation("unknown Bernoulli method");
}

BernoulliTable bernoulli_table(unsigned long max_k, BernMethodId method) {
    if (method == BernMethodId::recurrence) {
        return max_k == 0 ? BernoulliTable({Rational(1)}) : bernoulli_recurrence_table(max_k);
    }
    if (method == BernMethodId::cramer && max_k >= 1) return bernoulli_cramer_table(max_k);

    std::vector<Rational> B;
    B.reserve(max_k + 1);
    if (method == BernMethodId::leading_coeff || method == BernMethodId::integral) {
        const auto sums = powersum_table(max_k, MethodId::abramovich);
        for (unsigned long k = 0; k <= max_k; ++k) {
            if (method == BernMethodId::leading_coeff) {
                B.push_back(bernoulli_from_leading_coeff(k, sums));
            } else {
                B.push_back(k == 0 ? Rational(1) : bernoulli_from_integral(k, sums[k - 1]));
            }
        }
        return BernoulliTable(std::move(B));
    }
    for (unsigned long k = 0; k <= max_k; ++k) {
        if (k < min_k(method)) {
            B.push_back(k == 0 ? Rational(1) : minus_half());
        } else {
            B.push_back(bernoulli_number(k, method));
        }
    }
    return BernoulliTable(std::move(B));
}

}  // namespace faulhaber
