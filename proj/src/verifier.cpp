#include "kym/verifier.hpp"

#include <functional>
#include <sstream>

#include "kym/cym.hpp"

namespace kym {

namespace {

const Rational kOne{1};
const Rational kTwo{2};

struct Outcome {
    CheckStatus status;
    std::optional<std::string> witness;
};

Outcome pass() { return {CheckStatus::pass, std::nullopt}; }
Outcome fail(std::string w) { return {CheckStatus::fail, std::move(w)}; }
Outcome skipped(std::string w) { return {CheckStatus::skipped, std::move(w)}; }

class Runner {
public:
    void run(const std::string& id, const std::function<Outcome()>& fn) {
        CheckResult result;
        result.id = id;
        const auto start = std::chrono::steady_clock::now();
        try {
            const Outcome out = fn();
            result.status = out.status;
            result.witness = out.witness;
        } catch (const std::exception& e) {
            result.status = CheckStatus::fail;
            result.witness = std::string(e.what());
        }
        result.elapsed = std::chrono::steady_clock::now() - start;
        checks.push_back(std::move(result));
    }

    std::vector<CheckResult> checks;
};

// Collects named exact mismatches into one witness string.
class Mismatches {
public:
    void require(const std::string& name, bool ok, const std::string& detail = "") {
        if (ok) return;
        if (!text_.empty()) text_ += "; ";
        text_ += name;
        if (!detail.empty()) text_ += " = " + detail;
    }
    void require_eq(const std::string& name, const Rational& got, const Rational& want) {
        require(name, got == want, got.str() + " (expected " + want.str() + ")");
    }
    void require_eq(const std::string& name, const PoleSum& got, const PoleSum& want) {
        require(name, got == want, got.str() + " (expected " + want.str() + ")");
    }
    bool ok() const { return text_.empty(); }
    Outcome outcome() const { return ok() ? pass() : fail(text_); }

private:
    std::string text_;
};

std::string class_str(const SurfaceClass& c) {
    return "(" + c.m1.str() + ", " + c.m2.str() + ")";
}

std::string class_str(const ThreefoldClass& c) {
    return "(" + c.c1.str() + ", " + c.c2.str() + ", " + c.c3.str() + ")";
}

}  // namespace

const CheckResult* VerificationReport::find(const std::string& id) const {
    for (const auto& c : checks)
        if (c.id == id) return &c;
    return nullptr;
}

bool VerificationReport::only_failure_is(const std::string& id) const {
    bool seen = false;
    for (const auto& c : checks) {
        if (c.status != CheckStatus::fail) continue;
        if (c.id != id) return false;
        seen = true;
    }
    return seen;
}

std::string to_string(CheckStatus status) {
    switch (status) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
    }
    return "unknown";
}

VerificationReport verify_solution(const SurfaceSolution& sol) {
    VerificationReport report;
    {
        std::ostringstream fp;
        fp << "surface k=" << sol.config.k << " k'=" << sol.config.kprime
           << " k1=" << sol.config.k1 << " k2=" << sol.config.k2
           << " genus=" << sol.config.genus;
        if (!sol.from_integer_config)
            fp << " raw a=" << sol.a.str() << " b=" << sol.b.str();
        report.fingerprint = fp.str();
    }
    Runner runner;

    runner.run("boundary_conditions", [&] {
        Mismatches m;
        m.require_eq("F(1)", sol.F.evaluate(kOne), Rational(0));
        m.require_eq("F(-1)", sol.F.evaluate(Rational(-1)), Rational(0));
        const PoleSum dF = sol.F.derivative();
        m.require_eq("F'(1)", dF.evaluate(kOne), -kTwo * (kOne + sol.x));
        m.require_eq("F'(-1)", dF.evaluate(Rational(-1)), kTwo * (kOne - sol.x));
        return m.outcome();
    });

    runner.run("ode_residual", [&] {
        const SurfaceParams p{sol.x, sol.s_sigma, sol.a, sol.b};
        const PoleSum residual = sol.F.derivative().derivative() -
                                 surface_ode_rhs(p, sol.alpha1_over_alpha0,
                                                 sol.alpha2_over_alpha0);
        if (!residual.is_zero()) return fail("F'' - rhs = " + residual.str());
        return pass();
    });

    runner.run("coupled_residual", [&] {
        Mismatches m;
        const PoleSum scal = surface_scalar_curvature(sol.x, sol.s_sigma, sol.F);
        m.require_eq("scal", sol.scal, scal);
        const auto [trace, lambda2] = surface_contractions(sol.x, sol.a, sol.b);
        const PoleSum residual = scal + lambda2.scaled(sol.alpha1_over_alpha0) -
                                 PoleSum(sol.alpha2_over_alpha0);
        m.require("scal + r1*Lambda2 - r2", residual.is_zero(), residual.str());
        m.require_eq("trace_constant", sol.trace_constant, trace);
        return m.outcome();
    });

    runner.run("positivity", [&] {
        const PositivityCertificate cert = certify_positivity(sol.F);
        if (!cert.positive)
            return fail("interior roots = " + std::to_string(cert.interior.root_count) +
                        ", F(0) = " + cert.value_at_zero.str());
        return pass();
    });

    runner.run("class_integrality", [&] {
        Mismatches m;
        const SurfaceClass omega = surface_omega_class(sol.config.k, sol.config.kprime);
        const SurfaceClass gamma =
            surface_gamma_class(sol.config.k, sol.config.kprime, sol.a, sol.b);
        m.require("omega_class", sol.omega_class == omega, class_str(sol.omega_class));
        m.require("gamma_class", sol.gamma_class == gamma, class_str(sol.gamma_class));
        if (!m.ok()) return m.outcome();
        if (!omega.is_integral() || !gamma.is_integral()) {
            const std::string w = "gamma = " + class_str(gamma) + " not integral";
            // Raw (a, b) choices may legitimately leave the lattice.
            if (!sol.from_integer_config) return skipped(w);
            return fail(w);
        }
        return pass();
    });

    runner.run("alpha_ratios", [&] {
        Mismatches m;
        if (sol.from_integer_config) {
            m.require_eq("x", sol.x, sol.config.x());
            m.require_eq("s_sigma", sol.s_sigma, sol.config.s_sigma());
            m.require_eq("a", sol.a, sol.config.a());
            m.require_eq("b", sol.b, sol.config.b());
        }
        m.require_eq("alpha1/alpha0", sol.alpha1_over_alpha0,
                     surface_alpha1_ratio(sol.x, sol.s_sigma, sol.b));
        m.require_eq("alpha2/alpha0", sol.alpha2_over_alpha0,
                     surface_alpha2_ratio(sol.x, sol.s_sigma, sol.a, sol.b));
        m.require("alpha1/alpha0 < 0", sol.alpha1_over_alpha0.sign() < 0,
                  sol.alpha1_over_alpha0.str());
        return m.outcome();
    });

    runner.run("cym_coefficient", [&] {
        const Rational r1 = sol.alpha1_over_alpha0;
        const Rational coeff = kOne - Rational(4) * sol.alpha2_over_alpha0 * r1 +
                               Rational(8) * r1 * r1 * sol.trace_constant *
                                   sol.trace_constant;
        if (coeff.sign() > 0) return pass();
        return skipped("coefficient " + coeff.str() + " not positive: minimality uncertified");
    });

    report.checks = std::move(runner.checks);
    report.overall = true;
    for (const auto& c : report.checks)
        if (c.status == CheckStatus::fail) report.overall = false;
    return report;
}

VerificationReport verify_solution(const ThreefoldSolution& sol) {
    VerificationReport report;
    const ThreefoldConfig& cfg = sol.config;
    {
        std::ostringstream fp;
        fp << "threefold x1=" << cfg.x1.str() << " x2=" << cfg.x2.str()
           << " s1=" << cfg.s1.str() << " s2=" << cfg.s2.str();
        if (cfg.a) fp << " a=" << cfg.a->str();
        if (cfg.b) fp << " b=" << cfg.b->str();
        if (cfg.k1) fp << " k1=" << *cfg.k1;
        if (cfg.k2) fp << " k2=" << *cfg.k2;
        fp << " kappa1=" << sol.kappa1.str() << " kappa2=" << sol.kappa2.str();
        report.fingerprint = fp.str();
    }
    Runner runner;
    const bool has_ab = cfg.a.has_value() && cfg.b.has_value();

    runner.run("boundary_conditions", [&] {
        Mismatches m;
        m.require_eq("P(-1)", sol.P.evaluate(Rational(-1)),
                     kTwo * (kOne - cfg.x1) * (kOne - cfg.x2));
        m.require_eq("P(1)", sol.P.evaluate(kOne),
                     -kTwo * (kOne + cfg.x1) * (kOne + cfg.x2));
        m.require_eq("F(-1)", sol.F.evaluate(Rational(-1)), Rational(0));
        m.require_eq("F(1)", sol.F.evaluate(kOne), Rational(0));
        m.require("F' = P", sol.F.derivative() == sol.P, "profile is not the integral of P");
        return m.outcome();
    });

    runner.run("ode_residual", [&] {
        Mismatches m;
        const PoleSum rhs = threefold_ode_rhs(cfg, sol.kappa1, sol.kappa2);
        const PoleSum residual = sol.F.derivative().derivative() - rhs;
        m.require("F'' - rhs", residual.is_zero(), residual.str());
        const KappaSolution ks = solve_kappa_system(cfg.x1, cfg.x2, cfg.s1, cfg.s2);
        if (const auto* u = std::get_if<KappaUnique>(&ks)) {
            m.require_eq("kappa1", sol.kappa1, u->kappa1);
            m.require_eq("kappa2", sol.kappa2, u->kappa2);
        } else if (const auto* fam = std::get_if<KappaFamily>(&ks)) {
            m.require_eq("kappa1 (family)", sol.kappa1, fam->kappa1_at(sol.kappa2));
        } else {
            m.require("kappa system consistent", false, "system is inconsistent");
        }
        return m.outcome();
    });

    runner.run("coupled_residual", [&] {
        if (!has_ab) return skipped("no (a, b): curvature-form residual not checkable");
        Mismatches m;
        const PoleSum scal = threefold_scalar_curvature(cfg, sol.F);
        m.require_eq("scal", sol.scal, scal);
        const auto [trace, lambda2] = threefold_contractions(cfg);
        const Rational r1 = sol.alpha1_over_alpha0.value();
        const Rational r2 = sol.alpha2_over_alpha0.value();
        const PoleSum residual = scal + lambda2.scaled(r1) - PoleSum(r2);
        m.require("scal + r1*Lambda2 - r2", residual.is_zero(), residual.str());
        m.require_eq("trace_constant", sol.trace_constant.value(), trace);
        return m.outcome();
    });

    runner.run("positivity", [&] {
        const PositivityCertificate cert = certify_positivity(sol.F);
        if (!cert.positive)
            return fail("interior roots = " + std::to_string(cert.interior.root_count) +
                        ", F(0) = " + cert.value_at_zero.str());
        return pass();
    });

    runner.run("class_integrality", [&] {
        if (!cfg.k1 || !cfg.k2) return skipped("no (k1, k2): classes not defined");
        Mismatches m;
        const ThreefoldClass omega = threefold_omega_class(cfg.x1, cfg.x2, *cfg.k1, *cfg.k2);
        m.require("omega_class stored", sol.omega_class.has_value(), "missing");
        if (sol.omega_class)
            m.require("omega_class", *sol.omega_class == omega, class_str(*sol.omega_class));
        if (!has_ab) {
            if (!m.ok()) return m.outcome();
            return skipped("no (a, b): gamma class not defined");
        }
        const ThreefoldClass gamma =
            threefold_gamma_class(cfg.x1, cfg.x2, *cfg.a, *cfg.b, *cfg.k1, *cfg.k2);
        m.require("gamma_class stored", sol.gamma_class.has_value(), "missing");
        if (sol.gamma_class)
            m.require("gamma_class", *sol.gamma_class == gamma, class_str(*sol.gamma_class));
        if (!m.ok()) return m.outcome();
        if (!gamma.is_integral())
            return skipped("gamma = " + class_str(gamma) +
                           " not integral for this (a, b) choice");
        return pass();
    });

    runner.run("alpha_ratios", [&] {
        if (!has_ab) return skipped("no (a, b): alpha ratios not defined");
        Mismatches m;
        const Rational r1 = sol.kappa2 / (Rational(4) * *cfg.b * *cfg.b);
        m.require("alpha1/alpha0 stored", sol.alpha1_over_alpha0.has_value(), "missing");
        if (sol.alpha1_over_alpha0)
            m.require_eq("alpha1/alpha0", *sol.alpha1_over_alpha0, r1);
        m.require("alpha2/alpha0 stored", sol.alpha2_over_alpha0.has_value(), "missing");
        if (sol.alpha2_over_alpha0)
            m.require_eq("alpha2/alpha0", *sol.alpha2_over_alpha0,
                         Rational(12) * *cfg.a * *cfg.a * r1 - sol.kappa1);
        if (!m.ok()) return m.outcome();
        Outcome out = pass();
        out.witness = "sign(alpha1/alpha0) = " + std::to_string(r1.sign());
        return out;
    });

    runner.run("cym_coefficient", [&] {
        if (!has_ab) return skipped("no (a, b): coefficient not defined");
        const Rational coeff =
            threefold_cym_coefficient(sol.kappa1, sol.kappa2, *cfg.a, *cfg.b).value;
        if (coeff.sign() > 0) return pass();
        return skipped("coefficient " + coeff.str() + " not positive: minimality uncertified");
    });

    report.checks = std::move(runner.checks);
    report.overall = true;
    for (const auto& c : report.checks)
        if (c.status == CheckStatus::fail) report.overall = false;
    return report;
}

}  // namespace kym
