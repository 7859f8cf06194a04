#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "xlag/exactmath/poly.hpp"
#include "xlag/regularity/sturm.hpp"

namespace xlag {

struct SpecEcho {
    Rational alpha;
    Rational omega;
    std::vector<int> mI;
    std::vector<int> mII;
    int k = 0;
    int q = 0;
    Rational alpha_prime;

    friend bool operator==(const SpecEcho&, const SpecEcho&) = default;
};

struct RecurrenceEcho {
    bool applicable = false;
    bool holds = false;
    Rational lhs;
    Rational rhs;

    friend bool operator==(const RecurrenceEcho&, const RecurrenceEcho&) = default;
};

struct WronskianEcho {
    bool checked = false;
    bool match = false;

    friend bool operator==(const WronskianEcho&, const WronskianEcho&) = default;
};

struct PotentialEcho {
    Rational shift;
    std::vector<Rational> rational_numerator;
    std::vector<Rational> rational_denominator;

    friend bool operator==(const PotentialEcho&, const PotentialEcho&) = default;
};

struct EOPEcho {
    int nu = 0;
    int degree = 0;
    std::vector<Rational> coefficients;

    friend bool operator==(const EOPEcho&, const EOPEcho&) = default;
};

/// Floating-point verification results, kept apart from the exact fields.
struct NumericEcho {
    double orthogonality_max_offdiag = 0;
    std::vector<double> spectrum_computed;
    std::vector<double> spectrum_expected;
    double spectrum_max_relative_deviation = 0;
    double grid_halving_change = 0;

    friend bool operator==(const NumericEcho&, const NumericEcho&) = default;
};

struct ReportDocument {
    static constexpr int kSchema = 1;

    int schema = kSchema;
    SpecEcho spec;
    GReport g;
    RegularityCertificate certificate;
    RecurrenceEcho recurrence;
    WronskianEcho wronskian;
    PotentialEcho potential;
    std::vector<EOPEcho> eop;
    std::optional<NumericEcho> numeric;

    friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

// JSON mapping. Rationals travel as "p/q" strings so nothing is rounded.

inline nlohmann::json rational_json(const Rational& r) { return r.to_string(); }

inline Rational rational_from_json(const nlohmann::json& j) {
    if (!j.is_string()) throw SpecInvalid("expected a rational string, got " + j.dump());
    return Rational::parse(j.get<std::string>());
}

inline nlohmann::json rationals_json(std::span<const Rational> v) {
    auto a = nlohmann::json::array();
    for (const auto& r : v) a.push_back(rational_json(r));
    return a;
}

inline std::vector<Rational> rationals_from_json(const nlohmann::json& j) {
    std::vector<Rational> v;
    for (const auto& e : j) v.push_back(rational_from_json(e));
    return v;
}

inline nlohmann::json to_json(const SpecEcho& s) {
    return {{"alpha", rational_json(s.alpha)},
            {"omega", rational_json(s.omega)},
            {"mI", s.mI},
            {"mII", s.mII},
            {"k", s.k},
            {"q", s.q},
            {"alpha_prime", rational_json(s.alpha_prime)}};
}

inline nlohmann::json to_json(const GReport& g) {
    return {{"coefficients", rationals_json(g.g.coefficients())},
            {"mu_predicted", g.mu_predicted},
            {"mu_computed", g.mu_computed ? nlohmann::json(*g.mu_computed) : nlohmann::json(nullptr)},
            {"sigma", g.sigma},
            {"lead_predicted", rational_json(g.lead_predicted)},
            {"lead_computed", rational_json(g.lead_computed)},
            {"const_predicted", rational_json(g.const_predicted)},
            {"const_computed", rational_json(g.const_computed)},
            {"divisible", g.divisible},
            {"regular", g.regular},
            {"admissible", g.admissible}};
}

inline nlohmann::json to_json(const RegularityCertificate& c) {
    return {{"root_count_positive_axis", c.root_count_positive_axis},
            {"sign_at_zero", c.sign_at_zero},
            {"sign_at_infinity", c.sign_at_infinity},
            {"regular", c.regular},
            {"admissible", c.admissible},
            {"sturm_sequence_length", c.sturm_sequence_length},
            {"repeated_root_degree", c.repeated_root_degree}};
}

inline nlohmann::json to_json(const ReportDocument& r) {
    nlohmann::json j;
    j["schema"] = r.schema;
    j["spec"] = to_json(r.spec);
    j["g"] = to_json(r.g);
    j["certificate"] = to_json(r.certificate);
    j["recurrence"] = {{"applicable", r.recurrence.applicable},
                       {"holds", r.recurrence.holds},
                       {"lhs", rational_json(r.recurrence.lhs)},
                       {"rhs", rational_json(r.recurrence.rhs)}};
    j["wronskian_oracle"] = {{"checked", r.wronskian.checked}, {"match", r.wronskian.match}};
    j["potential"] = {{"shift", rational_json(r.potential.shift)},
                      {"rational_numerator", rationals_json(r.potential.rational_numerator)},
                      {"rational_denominator", rationals_json(r.potential.rational_denominator)}};
    auto eop = nlohmann::json::array();
    for (const auto& e : r.eop)
        eop.push_back({{"nu", e.nu}, {"degree", e.degree}, {"coefficients", rationals_json(e.coefficients)}});
    j["eop"] = eop;
    if (r.numeric) {
        const auto& n = *r.numeric;
        j["numeric"] = {{"orthogonality_max_offdiag", n.orthogonality_max_offdiag},
                        {"spectrum",
                         {{"computed", n.spectrum_computed},
                          {"expected", n.spectrum_expected},
                          {"max_relative_deviation", n.spectrum_max_relative_deviation},
                          {"grid_halving_change", n.grid_halving_change}}}};
    } else {
        j["numeric"] = nullptr;
    }
    return j;
}

inline ReportDocument report_from_json(const nlohmann::json& j) {
    try {
        ReportDocument r;
        r.schema = j.at("schema").get<int>();
        if (r.schema != ReportDocument::kSchema)
            throw SpecInvalid("unsupported report schema " + std::to_string(r.schema));

        const auto& s = j.at("spec");
        r.spec = {rational_from_json(s.at("alpha")), rational_from_json(s.at("omega")),
                  s.at("mI").get<std::vector<int>>(), s.at("mII").get<std::vector<int>>(),
                  s.at("k").get<int>(), s.at("q").get<int>(), rational_from_json(s.at("alpha_prime"))};

        const auto& g = j.at("g");
        r.g.g = Poly(rationals_from_json(g.at("coefficients")));
        r.g.mu_predicted = g.at("mu_predicted").get<long>();
        if (!g.at("mu_computed").is_null()) r.g.mu_computed = g.at("mu_computed").get<long>();
        r.g.sigma = g.at("sigma").get<long>();
        r.g.lead_predicted = rational_from_json(g.at("lead_predicted"));
        r.g.lead_computed = rational_from_json(g.at("lead_computed"));
        r.g.const_predicted = rational_from_json(g.at("const_predicted"));
        r.g.const_computed = rational_from_json(g.at("const_computed"));
        r.g.divisible = g.at("divisible").get<bool>();
        r.g.regular = g.at("regular").get<bool>();
        r.g.admissible = g.at("admissible").get<bool>();

        const auto& c = j.at("certificate");
        r.certificate.root_count_positive_axis = c.at("root_count_positive_axis").get<int>();
        r.certificate.sign_at_zero = c.at("sign_at_zero").get<int>();
        r.certificate.sign_at_infinity = c.at("sign_at_infinity").get<int>();
        r.certificate.regular = c.at("regular").get<bool>();
        r.certificate.admissible = c.at("admissible").get<bool>();
        r.certificate.sturm_sequence_length = c.at("sturm_sequence_length").get<int>();
        r.certificate.repeated_root_degree = c.at("repeated_root_degree").get<int>();

        const auto& rec = j.at("recurrence");
        r.recurrence = {rec.at("applicable").get<bool>(), rec.at("holds").get<bool>(), rational_from_json(rec.at("lhs")),
                        rational_from_json(rec.at("rhs"))};

        const auto& w = j.at("wronskian_oracle");
        r.wronskian = {w.at("checked").get<bool>(), w.at("match").get<bool>()};

        const auto& p = j.at("potential");
        r.potential = {rational_from_json(p.at("shift")), rationals_from_json(p.at("rational_numerator")),
                       rationals_from_json(p.at("rational_denominator"))};

        for (const auto& e : j.at("eop"))
            r.eop.push_back({e.at("nu").get<int>(), e.at("degree").get<int>(), rationals_from_json(e.at("coefficients"))});

        if (const auto& n = j.at("numeric"); !n.is_null()) {
            const auto& sp = n.at("spectrum");
            r.numeric = NumericEcho{n.at("orthogonality_max_offdiag").get<double>(),
                                    sp.at("computed").get<std::vector<double>>(),
                                    sp.at("expected").get<std::vector<double>>(),
                                    sp.at("max_relative_deviation").get<double>(),
                                    sp.at("grid_halving_change").get<double>()};
        }
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw SpecInvalid(std::string("malformed report: ") + e.what());
    }
}

} // namespace xlag
