#include "kym/json_report.hpp"

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <ctime>

namespace kym {

namespace {

using nlohmann::json;

std::string iso_utc_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[80];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ", tm.tm_year + 1900,
                  tm.tm_mon + 1, tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec);
    return buf;
}

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (const unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json rat(const Rational& r) { return r.str(); }

json class_json(const SurfaceClass& c) {
    return json{{"basis", "E0,C"},
                {"coordinates", {rat(c.m1), rat(c.m2)}},
                {"integral", c.is_integral()}};
}

json class_json(const ThreefoldClass& c) {
    return json{{"basis", "omega1/(2pi k1), omega2/(2pi k2), eta/(4pi)"},
                {"coordinates", {rat(c.c1), rat(c.c2), rat(c.c3)}},
                {"integral", c.is_integral()}};
}

}  // namespace

std::string artifact_version() { return "0.1.0"; }

RunManifest make_manifest(const std::string& command, const std::string& parameters) {
    RunManifest m;
    m.command = command;
    m.parameters = parameters;
    m.version = artifact_version();
    m.timestamp = iso_utc_now();
    m.input_hash = fnv1a_hex(command + " " + parameters);
    return m;
}

json to_json(const RunManifest& m) {
    return json{{"command", m.command},
                {"parameters", m.parameters},
                {"version", m.version},
                {"timestamp", m.timestamp},
                {"input_hash", m.input_hash}};
}

json to_json(const VerificationReport& report) {
    json checks = json::array();
    for (const auto& c : report.checks) {
        json entry{{"id", c.id}, {"status", to_string(c.status)}};
        if (c.witness) entry["witness"] = *c.witness;
        checks.push_back(std::move(entry));
    }
    return json{{"fingerprint", report.fingerprint},
                {"checks", std::move(checks)},
                {"overall", report.overall ? "pass" : "fail"}};
}

json to_json(const MinimalityReport& report) {
    json perturbations = json::array();
    for (const auto& p : report.perturbations) {
        perturbations.push_back(json{{"eps", rat(p.eps)},
                                     {"cym_base", p.cym_base},
                                     {"cym_perturbed", p.cym_perturbed},
                                     {"combined_error", p.combined_error},
                                     {"perturbed_profile_positive", p.perturbed_profile_positive},
                                     {"passed", p.passed}});
    }
    return json{{"coefficient", rat(report.coefficient.value)},
                {"positive", report.coefficient_positive},
                {"trace_term", report.trace_term},
                {"trace_term_relative", report.trace_term_relative},
                {"perturbations", std::move(perturbations)}};
}

json solution_report(const RunManifest& manifest, const SurfaceSolution& sol,
                     const VerificationReport& verification,
                     const std::optional<MinimalityReport>& minimality) {
    json report;
    report["manifest"] = to_json(manifest);
    report["family"] = "surface";
    report["inputs"] = json{{"k", sol.config.k},
                            {"kprime", sol.config.kprime},
                            {"k1", sol.config.k1},
                            {"k2", sol.config.k2},
                            {"genus", sol.config.genus}};
    report["constants"] = json{{"x", rat(sol.x)},
                               {"s_sigma", rat(sol.s_sigma)},
                               {"a", rat(sol.a)},
                               {"b", rat(sol.b)},
                               {"alpha1_over_alpha0", rat(sol.alpha1_over_alpha0)},
                               {"alpha2_over_alpha0", rat(sol.alpha2_over_alpha0)},
                               {"trace_constant", rat(sol.trace_constant)}};
    report["classes"] = json{{"omega", class_json(sol.omega_class)},
                             {"gamma", class_json(sol.gamma_class)},
                             {"integral", sol.omega_class.is_integral() &&
                                              sol.gamma_class.is_integral()}};
    const json ver = to_json(verification);
    report["checks"] = ver.at("checks");
    report["overall"] = ver.at("overall");
    if (minimality) report["cym"] = to_json(*minimality);
    else {
        const CymCoefficient coeff = surface_cym_coefficient(sol);
        report["cym"] = json{{"coefficient", rat(coeff.value)},
                             {"positive", coeff.positive()},
                             {"perturbations", json::array()}};
    }
    return report;
}

json solution_report(const RunManifest& manifest, const ThreefoldSolution& sol,
                     const VerificationReport& verification,
                     const std::optional<MinimalityReport>& minimality) {
    json report;
    report["manifest"] = to_json(manifest);
    report["family"] = "threefold";
    json inputs{{"x1", rat(sol.config.x1)},
                {"x2", rat(sol.config.x2)},
                {"s1", rat(sol.config.s1)},
                {"s2", rat(sol.config.s2)}};
    if (sol.config.a) inputs["a"] = rat(*sol.config.a);
    if (sol.config.b) inputs["b"] = rat(*sol.config.b);
    if (sol.config.k1) inputs["k1"] = *sol.config.k1;
    if (sol.config.k2) inputs["k2"] = *sol.config.k2;
    report["inputs"] = std::move(inputs);
    json constants{{"kappa1", rat(sol.kappa1)},
                   {"kappa2", rat(sol.kappa2)},
                   {"constant_scalar_curvature", sol.constant_scalar_curvature}};
    if (sol.alpha1_over_alpha0) constants["alpha1_over_alpha0"] = rat(*sol.alpha1_over_alpha0);
    if (sol.alpha2_over_alpha0) constants["alpha2_over_alpha0"] = rat(*sol.alpha2_over_alpha0);
    if (sol.trace_constant) constants["trace_constant"] = rat(*sol.trace_constant);
    report["constants"] = std::move(constants);
    json classes;
    if (sol.omega_class) {
        classes["omega"] = class_json(*sol.omega_class);
        classes["omega_rescaling_factor"] =
            minimal_integer_rescaling(*sol.omega_class).get_str();
    }
    if (sol.gamma_class) classes["gamma"] = class_json(*sol.gamma_class);
    classes["integral"] = sol.gamma_class && sol.gamma_class->is_integral();
    report["classes"] = std::move(classes);
    report["positivity_holds"] = sol.positivity_holds;
    const json ver = to_json(verification);
    report["checks"] = ver.at("checks");
    report["overall"] = ver.at("overall");
    if (minimality) report["cym"] = to_json(*minimality);
    else if (sol.config.a && sol.config.b) {
        const CymCoefficient coeff =
            threefold_cym_coefficient(sol.kappa1, sol.kappa2, *sol.config.a, *sol.config.b);
        report["cym"] = json{{"coefficient", rat(coeff.value)},
                             {"positive", coeff.positive()},
                             {"perturbations", json::array()}};
    }
    return report;
}

json inconsistent_report(const RunManifest& manifest, const ThreefoldConfig& cfg) {
    json report;
    report["manifest"] = to_json(manifest);
    report["family"] = "threefold";
    report["inputs"] = json{{"x1", cfg.x1.str()},
                            {"x2", cfg.x2.str()},
                            {"s1", cfg.s1.str()},
                            {"s2", cfg.s2.str()}};
    report["classification"] = "inconsistent";
    report["overall"] = "fail";
    return report;
}

}  // namespace kym
