#pragma once

// JSON forms of the report types (nlohmann::json ADL hooks).
// Doubles are written in shortest round-trip form, so parse(dump(x)) == x.

#include <string>

#include <json.hpp>

#include "korenblum/bound_engine.hpp"
#include "korenblum/certification.hpp"
#include "korenblum/laurent.hpp"
#include "korenblum/oracle_harness.hpp"
#include "korenblum/quadrature.hpp"

namespace korenblum {

inline constexpr const char* kSchemaVersion = "korenblum-certifier/1";

using json = nlohmann::json;

inline void to_json(json& j, Space space) { j = space_name(space); }

inline void from_json(const json& j, Space& space) {
    const auto parsed = parse_space(j.get<std::string>());
    if (!parsed) throw json::other_error::create(501, "unknown space '" + j.get<std::string>() + "'", &j);
    space = *parsed;
}

inline void to_json(json& j, const TruncationPolicy& p) {
    j = json{{"epsilon", p.epsilon}, {"max_terms", p.max_terms}, {"min_terms", p.min_terms}};
}

inline void from_json(const json& j, TruncationPolicy& p) {
    j.at("epsilon").get_to(p.epsilon);
    j.at("max_terms").get_to(p.max_terms);
    p.min_terms = j.value("min_terms", 1);
}

inline void to_json(json& j, const QuadratureEstimate& q) {
    j = json{{"value", q.value},
             {"abs_error_estimate", q.abs_error_estimate},
             {"evaluations", q.evaluations},
             {"converged", q.converged}};
}

inline void from_json(const json& j, QuadratureEstimate& q) {
    j.at("value").get_to(q.value);
    j.at("abs_error_estimate").get_to(q.abs_error_estimate);
    j.at("evaluations").get_to(q.evaluations);
    j.at("converged").get_to(q.converged);
}

inline void to_json(json& j, const Certificate& c) {
    j = json{{"space", c.space},
             {"c", c.c},
             {"numerator", c.numerator},
             {"denominator", c.denominator},
             {"criterion", c.criterion},
             {"error_budget", c.error_budget},
             {"pass", c.pass},
             {"truncation_policy", c.truncation_policy},
             {"clamped_fraction", c.clamped_fraction},
             {"closed_form_denominator", nullptr}};
    if (c.closed_form_denominator) j["closed_form_denominator"] = *c.closed_form_denominator;
}

inline void from_json(const json& j, Certificate& c) {
    j.at("space").get_to(c.space);
    j.at("c").get_to(c.c);
    j.at("numerator").get_to(c.numerator);
    j.at("denominator").get_to(c.denominator);
    j.at("criterion").get_to(c.criterion);
    j.at("error_budget").get_to(c.error_budget);
    j.at("pass").get_to(c.pass);
    j.at("truncation_policy").get_to(c.truncation_policy);
    j.at("clamped_fraction").get_to(c.clamped_fraction);
    const json& closed = j.at("closed_form_denominator");
    c.closed_form_denominator = closed.is_null() ? std::nullopt : std::optional<double>(closed.get<double>());
}

inline void to_json(json& j, const SearchResult& s) {
    j = json{{"space", s.space},
             {"c_max", s.c_max},
             {"bracket", {s.bracket.first, s.bracket.second}},
             {"iterations", s.iterations},
             {"lo_certificate", s.lo_certificate},
             {"hi_certificate", nullptr}};
    if (s.hi_certificate) j["hi_certificate"] = *s.hi_certificate;
}

inline void from_json(const json& j, SearchResult& s) {
    j.at("space").get_to(s.space);
    j.at("c_max").get_to(s.c_max);
    s.bracket = {j.at("bracket").at(0).get<double>(), j.at("bracket").at(1).get<double>()};
    j.at("iterations").get_to(s.iterations);
    j.at("lo_certificate").get_to(s.lo_certificate);
    const json& hi = j.at("hi_certificate");
    s.hi_certificate = hi.is_null() ? std::nullopt : std::optional<Certificate>(hi.get<Certificate>());
}

inline void to_json(json& j, const GridSpec& g) {
    j = json{{"c_values", g.c_values},         {"rho_steps", g.rho_steps},   {"theta_steps", g.theta_steps},
             {"n_range", {g.n_min, g.n_max}},  {"rho_values", g.rho_values}, {"theta_values", g.theta_values}};
}

inline void from_json(const json& j, GridSpec& g) {
    j.at("c_values").get_to(g.c_values);
    j.at("rho_steps").get_to(g.rho_steps);
    j.at("theta_steps").get_to(g.theta_steps);
    g.n_min = j.at("n_range").at(0).get<int>();
    g.n_max = j.at("n_range").at(1).get<int>();
    j.at("rho_values").get_to(g.rho_values);
    j.at("theta_values").get_to(g.theta_values);
}

inline void to_json(json& j, const ClaimReport& r) {
    j = json{{"claim_id", r.claim_id},
             {"grid", r.grid},
             {"max_violation", r.max_violation},
             {"worst_point",
              {{"c", r.worst_point.c},
               {"rho", r.worst_point.point.rho},
               {"theta", r.worst_point.point.theta},
               {"n", r.worst_point.n}}},
             {"tolerance", r.tolerance},
             {"points_checked", r.points_checked},
             {"low_density", r.low_density},
             {"pass", r.pass}};
}

inline void from_json(const json& j, ClaimReport& r) {
    j.at("claim_id").get_to(r.claim_id);
    j.at("grid").get_to(r.grid);
    j.at("max_violation").get_to(r.max_violation);
    const json& w = j.at("worst_point");
    w.at("c").get_to(r.worst_point.c);
    w.at("rho").get_to(r.worst_point.point.rho);
    w.at("theta").get_to(r.worst_point.point.theta);
    w.at("n").get_to(r.worst_point.n);
    j.at("tolerance").get_to(r.tolerance);
    j.at("points_checked").get_to(r.points_checked);
    j.at("low_density").get_to(r.low_density);
    j.at("pass").get_to(r.pass);
}

inline void to_json(json& j, const PairReport& r) {
    j = json{{"space", r.space},
             {"c", r.c},
             {"hypothesis_margin", r.hypothesis_margin},
             {"hypothesis_holds", r.hypothesis_holds},
             {"infinity_check", r.infinity_check},
             {"outer_radius", r.outer_radius},
             {"norm_f_sq", r.norm_f_sq},
             {"norm_g_sq", r.norm_g_sq},
             {"conclusion_holds", r.conclusion_holds},
             {"samples", r.samples}};
}

inline void from_json(const json& j, PairReport& r) {
    j.at("space").get_to(r.space);
    j.at("c").get_to(r.c);
    j.at("hypothesis_margin").get_to(r.hypothesis_margin);
    j.at("hypothesis_holds").get_to(r.hypothesis_holds);
    j.at("infinity_check").get_to(r.infinity_check);
    j.at("outer_radius").get_to(r.outer_radius);
    j.at("norm_f_sq").get_to(r.norm_f_sq);
    j.at("norm_g_sq").get_to(r.norm_g_sq);
    j.at("conclusion_holds").get_to(r.conclusion_holds);
    j.at("samples").get_to(r.samples);
}

/// {"min_degree": int, "coeffs": [[re, im], ...]}
inline void to_json(json& j, const LaurentFunction& fn) {
    json coeffs = json::array();
    for (const Complex& a : fn.coeffs()) coeffs.push_back({a.real(), a.imag()});
    j = json{{"min_degree", fn.min_degree()}, {"coeffs", coeffs}};
}

inline void from_json(const json& j, LaurentFunction& fn) {
    std::vector<Complex> coeffs;
    for (const json& entry : j.at("coeffs")) {
        if (!entry.is_array() || entry.size() != 2) {
            throw json::type_error::create(302, "coefficient must be a [re, im] pair", &entry);
        }
        coeffs.emplace_back(entry.at(0).get<double>(), entry.at(1).get<double>());
    }
    fn = LaurentFunction(j.at("min_degree").get<int>(), std::move(coeffs));
}

/// Wraps a payload in the versioned top-level envelope.
template <typename T>
json envelope(const std::string& kind, const T& payload) {
    return json{{"schema", kSchemaVersion}, {kind, payload}};
}

}  // namespace korenblum
