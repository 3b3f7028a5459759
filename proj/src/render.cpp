#include "faulhaber/render.hpp"

#include <utility>
#include <vector>

namespace faulhaber {

namespace {

std::string subscript(unsigned long k, bool latex) {
    const std::string digits = std::to_string(k);
    return (latex && digits.size() > 1) ? "{" + digits + "}" : digits;
}

std::string latex_magnitude(const Rational& abs_value) {
    if (abs_value.is_integer()) return abs_value.to_string();
    return "\\frac{" + abs_value.numerator().get_str() + "}{" + abs_value.denominator().get_str() + "}";
}

std::string render_terms(const PowerSumPoly& s, bool latex) {
    std::string out = "S_" + subscript(s.k(), latex) + "(n) =";
    bool first = true;
    for (std::size_t power = s.k() + 1; power >= 1; --power) {
        const Rational c = s.a(power);
        if (c.is_zero()) continue;
        const Rational magnitude = c.sign() < 0 ? -c : c;

        if (first) {
            out += c.sign() < 0 ? " -" : " ";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        first = false;

        if (magnitude != Rational(1)) out += (latex ? latex_magnitude(magnitude) : magnitude.to_string()) + " ";
        out += "n";
        if (power > 1) out += latex ? "^{" + std::to_string(power) + "}" : "^" + std::to_string(power);
    }
    return out;
}

}  // namespace

std::string_view to_string(OutputFormat f) {
    switch (f) {
        case OutputFormat::plain: return "plain";
        case OutputFormat::latex: return "latex";
        case OutputFormat::json: return "json";
    }
    return "?";
}

std::optional<OutputFormat> parse_format(std::string_view name) {
    for (const auto f : {OutputFormat::plain, OutputFormat::latex, OutputFormat::json}) {
        if (to_string(f) == name) return f;
    }
    return std::nullopt;
}

std::string render_plain(const PowerSumPoly& s) { return render_terms(s, false); }

std::string render_latex(const PowerSumPoly& s) { return render_terms(s, true); }

nlohmann::json to_json(const PowerSumPoly& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (std::size_t power = s.k() + 1; power >= 1; --power) {
        const Rational c = s.a(power);
        coeffs.push_back({{"power", power}, {"num", c.numerator().get_str()}, {"den", c.denominator().get_str()}});
    }
    return {{"k", s.k()}, {"coefficients", std::move(coeffs)}};
}

PowerSumPoly powersum_from_json(const nlohmann::json& j) {
    try {
        const auto k = j.at("k").get<unsigned long>();
        std::vector<Rational> a(k + 2);
        std::vector<bool> seen(k + 2, false);
        for (const auto& entry : j.at("coefficients")) {
            const auto power = entry.at("power").get<std::size_t>();
            if (power < 1 || power > k + 1) throw ContractViolation("power " + std::to_string(power) + " out of range");
            if (seen[power]) throw ContractViolation("power " + std::to_string(power) + " listed twice");
            seen[power] = true;
            const auto num = entry.at("num").get<std::string>();
            const auto den = entry.at("den").get<std::string>();
            a[power] = Rational::parse(num + "/" + den);
        }
        return PowerSumPoly(k, Poly(std::move(a)));
    } catch (const nlohmann::json::exception& e) {
        throw ContractViolation(std::string("power-sum JSON: ") + e.what());
    }
}

std::string render_powersum(const PowerSumPoly& s, OutputFormat format) {
    switch (format) {
        case OutputFormat::plain: return render_plain(s);
        case OutputFormat::latex: return render_latex(s);
        case OutputFormat::json: return to_json(s).dump();
    }
    return {};
}

std::string render_bernoulli(unsigned long k, const Rational& value, BernMethodId method, OutputFormat format) {
    switch (format) {
        case OutputFormat::plain: return value.to_string();
        case OutputFormat::latex: {
            const Rational magnitude = value.sign() < 0 ? -value : value;
            return "B_" + subscript(k, true) + " = " + (value.sign() < 0 ? "-" : "") + latex_magnitude(magnitude);
        }
        case OutputFormat::json: {
            const nlohmann::json j = {{"k", k},
                                      {"num", value.numerator().get_str()},
                                      {"den", value.denominator().get_str()},
                                      {"method", std::string(to_string(method))}};
            return j.dump();
        }
    }
    return {};
}

}  // namespace faulhaber
