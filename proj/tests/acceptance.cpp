// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// fails. Every tolerance is pinned in code; exact checks use the rational
// layer, numerical ones carry quadrature error estimates.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "kym/cym.hpp"
#include "kym/json_report.hpp"
#include "kym/verifier.hpp"

using namespace kym;

namespace {

std::mt19937_64 acceptance_rng(20250808);

long rand_long(long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    return dist(acceptance_rng);
}

SurfaceConfig random_surface_config() {
    SurfaceConfig c;
    c.k = static_cast<int>(rand_long(1, 6));
    c.kprime = static_cast<int>(rand_long(1, 6));
    c.k1 = static_cast<int>(rand_long(-3, 3));
    c.k2 = static_cast<int>(rand_long(0, 1) ? rand_long(1, 3) : rand_long(-3, -1));
    c.genus = static_cast<int>(rand_long(0, 4));
    return c;
}

Rational random_x(int sign) {
    while (true) {
        const long den = rand_long(2, 11);
        const long num = rand_long(1, den - 1);
        if (num != 0) return Rational(sign * num, den);
    }
}

Rational random_base_scal(const Rational& x) {
    const long h = rand_long(0, 4);
    const long k = (x.sign() > 0 ? 1 : -1) * rand_long(1, 4);
    return Rational(2 * (1 - h), k);
}

struct CriterionOutcome {
    bool ok = false;
    std::string detail;
};

int failures = 0;

void run_criterion(int number, const std::string& label, double budget_seconds,
                   const std::function<CriterionOutcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    CriterionOutcome outcome;
    try {
        outcome = body();
    } catch (const std::exception& e) {
        outcome.ok = false;
        outcome.detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > budget_seconds) {
        outcome.ok = false;
        outcome.detail += (outcome.detail.empty() ? "" : "; ") + std::string("over budget");
    }
    std::printf("[%s] criterion %2d: %s (%.3fs / %.0fs)%s%s\n", outcome.ok ? "PASS" : "FAIL",
                number, label.c_str(), elapsed, budget_seconds,
                outcome.detail.empty() ? "" : " -- ", outcome.detail.c_str());
    if (!outcome.ok) ++failures;
}

Rational unique_kappa2(const Rational& x1, const Rational& x2, const Rational& s1,
                       const Rational& s2) {
    const KappaSolution ks = solve_kappa_system(x1, x2, s1, s2);
    if (!std::holds_alternative<KappaUnique>(ks))
        throw std::runtime_error("expected a unique kappa solution");
    return std::get<KappaUnique>(ks).kappa2;
}

struct WorkedExample {
    Rational x2, s1, s2;
    long denom_constant;   // printed leading denominator constant
    long numer_scale = 1;  // printed overall numerator scale
    std::vector<long> coeffs;
};

const std::vector<WorkedExample>& worked_examples() {
    static const std::vector<WorkedExample> ex = {
        {Rational(-3, 4), Rational(2), Rational(-2), 3284, 1,
         {-57636, -396428, 431692, 369508, -304629, -150804, 60291, 25839}},
        {Rational(-1, 3), Rational(2), Rational(0), 1962, 1,
         {12636, -120588, -85289, 33646, 24982, -5012, -2033, 394}},
        {Rational(-1, 3), Rational(2), Rational(2), 981, 2,
         {3456, -25860, -21568, 3239, 6188, -319, -502, 50}},
        {Rational(-2, 5), Rational(0), Rational(2), 5310, 1,
         {57622, -777868, -363069, 225660, 108333, -16656, -7852, -368}},
    };
    return ex;
}

ThreefoldConfig worked_config(const WorkedExample& ex) {
    ThreefoldConfig cfg;
    cfg.x1 = Rational(1, 2);
    cfg.x2 = ex.x2;
    cfg.s1 = ex.s1;
    cfg.s2 = ex.s2;
    return cfg;
}

std::pair<Rational, Rational> worked_kappas(const ThreefoldConfig& cfg) {
    const KappaSolution ks = solve_kappa_system(cfg.x1, cfg.x2, cfg.s1, cfg.s2);
    const auto& u = std::get<KappaUnique>(ks);
    return {u.kappa1, u.kappa2};
}

Poly cleared_profile_numerator(const ThreefoldConfig& cfg, const PoleSum& P) {
    const Poly f1 = Poly::linear(Rational(cfg.x1.den()), Rational(cfg.x1.num()));
    const Poly f2 = Poly::linear(Rational(cfg.x2.den()), Rational(cfg.x2.num()));
    const PoleSum cleared = P.times_poly(f1 * f1 * f2 * f2);
    if (!cleared.is_polynomial())
        throw std::runtime_error("profile numerator did not clear");
    return cleared.poly_part();
}

}  // namespace

int main() {
    run_criterion(1, "kappa2 reproduction, exact", 1.0, [] {
        CriterionOutcome out;
        out.ok = unique_kappa2(Rational(1, 2), Rational(-1, 3), Rational(2), Rational(0)) ==
                     Rational(256, 327) &&
                 unique_kappa2(Rational(1, 2), Rational(-1, 3), Rational(2), Rational(2)) ==
                     Rational(608, 327) &&
                 unique_kappa2(Rational(1, 2), Rational(-2, 5), Rational(0), Rational(2)) ==
                     Rational(1029, 1475) &&
                 unique_kappa2(Rational(1, 2), Rational(-4, 9), Rational(-1), Rational(2)) ==
                     Rational(71825, 348408);
        if (!out.ok) out.detail = "a kappa2 value differs from its printed fraction";
        return out;
    });

    run_criterion(2, "printed degree-7 numerators, exact", 2.0, [] {
        CriterionOutcome out;
        out.ok = true;
        for (const auto& ex : worked_examples()) {
            const ThreefoldConfig cfg = worked_config(ex);
            Rational kappa1, kappa2;
            if (ex.s2 == Rational(-2)) {
                std::tie(kappa1, kappa2) = kappa_closed_forms_x1_half(ex.x2);
            } else {
                std::tie(kappa1, kappa2) = worked_kappas(cfg);
            }
            const Poly n = cleared_profile_numerator(cfg, build_P(cfg, kappa1, kappa2));
            const Rational scale(ex.numer_scale, ex.denom_constant);
            for (std::size_t i = 0; i < ex.coeffs.size(); ++i) {
                if (!(n.coeff(static_cast<int>(i)) == scale * Rational(ex.coeffs[i]))) {
                    out.ok = false;
                    out.detail = "coefficient mismatch at degree " + std::to_string(i);
                }
            }
        }
        // the fifth worked example has one operator dropped in print between
        // the t^2 and t^3 terms; all other coefficients must match and the
        // reconciling sign of 54232672 t^3 is reported
        ThreefoldConfig cfg5;
        cfg5.x1 = Rational(1, 2);
        cfg5.x2 = Rational(-4, 9);
        cfg5.s1 = Rational(-1);
        cfg5.s2 = Rational(2);
        const auto [k1, k2] = worked_kappas(cfg5);
        const Poly n5 = cleared_profile_numerator(cfg5, build_P(cfg5, k1, k2));
        const Rational scale5(1, 348408);
        const std::vector<long> printed5 = {6466113,  -159543216, -40474082, 54232672,
                                            11937913, -1961120,   -731312,   -579968};
        for (std::size_t i = 0; i < printed5.size(); ++i) {
            if (i == 3) continue;
            if (!(n5.coeff(static_cast<int>(i)) == scale5 * Rational(printed5[i]))) {
                out.ok = false;
                out.detail = "fifth example: coefficient mismatch at degree " + std::to_string(i);
            }
        }
        const Rational t3 = n5.coeff(3) / scale5;
        if (t3 == Rational(54232672)) {
            out.detail += (out.detail.empty() ? "" : "; ");
            out.detail += "fifth example t^3 sign reconciles as +54232672";
        } else if (t3 == Rational(-54232672)) {
            out.detail += (out.detail.empty() ? "" : "; ");
            out.detail += "fifth example t^3 sign reconciles as -54232672";
        } else {
            out.ok = false;
            out.detail += "; fifth example t^3 coefficient is " + t3.str() +
                          ", not +-54232672";
        }
        return out;
    });

    run_criterion(3, "surface closed forms on a random grid, exact", 5.0, [] {
        CriterionOutcome out;
        out.ok = true;
        for (int i = 0; i < 50; ++i) {
            const SurfaceConfig c = random_surface_config();
            const SurfaceSolution sol = build_surface_solution(c);
            const SurfaceParams p{sol.x, sol.s_sigma, sol.a, sol.b};
            // independent route: integrate the ODE twice from z = -1
            PoleSum slope = surface_ode_rhs(p, sol.alpha1_over_alpha0, sol.alpha2_over_alpha0)
                                .antiderivative(Rational(-1));
            slope += PoleSum(Rational(2) * (Rational(1) - sol.x));
            const PoleSum reconstructed = slope.antiderivative(Rational(-1));
            const bool f_ok = reconstructed == sol.F;
            const bool scal_ok =
                sol.scal == surface_scalar_curvature_closed_form(sol.x, sol.s_sigma);
            const Rational alpha1_fixed =
                -((Rational(2) - c.s_sigma()) * Rational(c.k) + Rational(2L * c.kprime)) /
                (Rational(8) * Rational(c.k2) * Rational(c.k2) *
                 Rational(1L * c.k + c.kprime));
            const bool a1_ok = sol.alpha1_over_alpha0 == alpha1_fixed;
            if (!(f_ok && scal_ok && a1_ok)) {
                out.ok = false;
                out.detail = "mismatch at k=" + std::to_string(c.k) +
                             " k'=" + std::to_string(c.kprime);
                break;
            }
        }
        return out;
    });

    run_criterion(4, "coupled-equation residuals vanish, exact", 30.0, [] {
        CriterionOutcome out;
        out.ok = true;
        for (int i = 0; i < 50 && out.ok; ++i) {
            const SurfaceSolution sol = build_surface_solution(random_surface_config());
            const auto [trace, lambda2] = surface_contractions(sol.x, sol.a, sol.b);
            const PoleSum residual = sol.scal + lambda2.scaled(sol.alpha1_over_alpha0) -
                                     PoleSum(sol.alpha2_over_alpha0);
            if (!residual.is_zero() || !(trace == sol.trace_constant)) {
                out.ok = false;
                out.detail = "surface residual nonzero";
            }
        }
        int built = 0;
        while (built < 60 && out.ok) {
            const Rational x1 = random_x(1);
            const Rational x2 = random_x(-1);
            if (x1 == -x2) continue;
            ThreefoldConfig cfg;
            cfg.x1 = x1;
            cfg.x2 = x2;
            cfg.s1 = random_base_scal(x1);
            cfg.s2 = random_base_scal(x2);
            cfg.a = Rational(rand_long(-3, 3));
            cfg.b = Rational(rand_long(1, 5), rand_long(1, 3));
            const ThreefoldSolution sol = build_threefold_solution(cfg);
            const auto [trace, lambda2] = threefold_contractions(cfg);
            const PoleSum residual = sol.scal + lambda2.scaled(*sol.alpha1_over_alpha0) -
                                     PoleSum(*sol.alpha2_over_alpha0);
            if (!residual.is_zero() || !(trace == *sol.trace_constant)) {
                out.ok = false;
                out.detail = "threefold residual nonzero";
            }
            ++built;
        }
        return out;
    });

    run_criterion(5, "positivity certificates (profile grid + worked examples)", 10.0, [] {
        CriterionOutcome out;
        out.ok = true;
        for (int i = 0; i < 40 && out.ok; ++i) {
            const SurfaceSolution sol = build_surface_solution(random_surface_config());
            const PositivityCertificate cert = certify_positivity(sol.F);
            if (!cert.positive) {
                out.ok = false;
                out.detail = "surface profile certificate failed";
            }
        }
        std::vector<ThreefoldConfig> configs;
        for (const auto& ex : worked_examples()) configs.push_back(worked_config(ex));
        ThreefoldConfig cfg5;
        cfg5.x1 = Rational(1, 2);
        cfg5.x2 = Rational(-4, 9);
        cfg5.s1 = Rational(-1);
        cfg5.s2 = Rational(2);
        configs.push_back(cfg5);
        for (const auto& cfg : configs) {
            Rational kappa1, kappa2;
            if (cfg.s2 == Rational(-2)) {
                std::tie(kappa1, kappa2) = kappa_closed_forms_x1_half(cfg.x2);
            } else {
                std::tie(kappa1, kappa2) = worked_kappas(cfg);
            }
            const PoleSum F = build_F_threefold(build_P(cfg, kappa1, kappa2));
            const PositivityCertificate cert = certify_positivity(F);
            if (!cert.positive || cert.p_sign_changes != 1 || cert.p_sign_at_lo != 1 ||
                cert.p_sign_at_hi != -1) {
                out.ok = false;
                out.detail = "worked-example certificate failed at x2 = " + cfg.x2.str();
            }
        }
        return out;
    });

    run_criterion(6, "degenerate classification, exact", 1.0, [] {
        CriterionOutcome out;
        const KappaSolution inc =
            solve_kappa_system(Rational(1, 2), Rational(-1, 2), Rational(2), Rational(0));
        const KappaSolution fam =
            solve_kappa_system(Rational(1, 2), Rational(-1, 2), Rational(2), Rational(-2));
        out.ok = std::holds_alternative<KappaInconsistent>(inc) &&
                 std::holds_alternative<KappaFamily>(fam);
        if (out.ok) {
            const auto& f = std::get<KappaFamily>(fam);
            for (long i = -4; i <= 4 && out.ok; ++i) {
                const Rational k2(i, 2);
                out.ok = Rational(33) * f.kappa1_at(k2) - Rational(16) * k2 == Rational(-198);
            }
            if (!out.ok) out.detail = "family constraint 33 kappa1 - 16 kappa2 = -198 violated";
        } else {
            out.detail = "classification branch mismatch";
        }
        return out;
    });

    run_criterion(7, "kappa2 sign survey on the same-sign quadrants, exact", 10.0, [] {
        CriterionOutcome out;
        out.ok = true;
        for (int quadrant = 0; quadrant < 2 && out.ok; ++quadrant) {
            const int sign = quadrant == 0 ? 1 : -1;
            int checked = 0;
            while (checked < 500) {
                const Rational x1 = random_x(sign);
                const Rational x2 = random_x(sign);
                if (x1 == x2) continue;
                const Rational s1 = random_base_scal(x1);
                const Rational s2 = random_base_scal(x2);
                const KappaSolution ks = solve_kappa_system(x1, x2, s1, s2);
                if (!std::holds_alternative<KappaUnique>(ks)) continue;
                if (std::get<KappaUnique>(ks).kappa2.sign() > 0) {
                    out.ok = false;
                    out.detail = "positive kappa2 at x1=" + x1.str() + ", x2=" + x2.str();
                    break;
                }
                ++checked;
            }
        }
        return out;
    });

    run_criterion(8, "CYM coefficient asymptotics, exact", 1.0, [] {
        CriterionOutcome out;
        out.ok = true;
        for (int k2 = 1; k2 <= 2 && out.ok; ++k2) {
            for (int a = 0; a <= 2 && out.ok; ++a) {
                SurfaceConfig c;
                c.k = 1;
                c.kprime = 1000000;
                c.k1 = a;
                c.k2 = k2;
                c.genus = 0;
                const Rational coeff =
                    surface_cym_coefficient(build_surface_solution(c)).value;
                const Rational k2r(static_cast<long>(k2)), ar(static_cast<long>(a));
                const Rational limit =
                    Rational(1) + Rational(3) / (k2r * k2r) + ar * ar / k2r.pow(4);
                if (!((coeff - limit).abs() * Rational(1000) < limit)) {
                    out.ok = false;
                    out.detail = "limit deviation too large at k2=" + std::to_string(k2);
                }
            }
        }
        // alpha2 = 0 for the special choice x = 1/2, s = -2, b = 3a
        SurfaceConfig special;
        special.k = 2;
        special.kprime = 2;
        special.k1 = 3;
        special.k2 = 3;
        special.genus = 3;
        const SurfaceSolution sol = build_surface_solution(special);
        if (!sol.alpha2_over_alpha0.is_zero()) {
            out.ok = false;
            out.detail += "; alpha2/alpha0 != 0 for the special choice";
        }
        return out;
    });

    run_criterion(9, "CYM minimality under bump perturbations", 30.0, [] {
        CriterionOutcome out;
        out.ok = true;
        const auto check_report = [&out](const MinimalityReport& report, const char* tag) {
            if (!report.coefficient_positive) {
                out.ok = false;
                out.detail = std::string(tag) + ": coefficient not positive";
                return;
            }
            if (!(report.trace_term_relative < 1e-12)) {
                out.ok = false;
                out.detail = std::string(tag) + ": trace term too large";
                return;
            }
            for (const auto& p : report.perturbations) {
                const double margin = p.cym_perturbed - p.cym_base;
                if (!(p.perturbed_profile_positive && margin > 10 * p.combined_error)) {
                    out.ok = false;
                    out.detail = std::string(tag) + ": margin " + std::to_string(margin) +
                                 " below 10x error " + std::to_string(p.combined_error);
                    return;
                }
            }
        };
        SurfaceConfig sc;
        sc.k = 1;
        sc.kprime = 20;
        sc.k1 = 1;
        sc.k2 = 1;
        sc.genus = 0;
        const std::vector<Rational> eps = {Rational(1, 100), Rational(1, 10)};
        check_report(minimality_report(build_surface_solution(sc), eps, 16, {}), "surface");
        ThreefoldConfig tc;
        tc.x1 = Rational(1, 2);
        tc.x2 = Rational(-1, 3);
        tc.s1 = Rational(2);
        tc.s2 = Rational(2);
        tc.a = Rational(1);
        tc.b = Rational(50);
        if (out.ok)
            check_report(minimality_report(build_threefold_solution(tc), eps, 16, {}),
                         "threefold");
        return out;
    });

    run_criterion(10, "mutation soundness of the verifier", 60.0, [] {
        CriterionOutcome out;
        out.ok = true;
        int flipped = 0, total = 0;
        {
            SurfaceConfig c;
            c.k = 1;
            c.kprime = 1;
            c.k1 = 1;
            c.k2 = 1;
            c.genus = 0;
            const SurfaceSolution base = build_surface_solution(c);
            if (!verify_solution(base).overall) {
                out.ok = false;
                out.detail = "surface base report does not pass";
                return out;
            }
            const std::vector<std::function<void(SurfaceSolution&)>> mutations = {
                [](SurfaceSolution& s) { s.x += Rational(1, 7); },
                [](SurfaceSolution& s) { s.s_sigma += Rational(1); },
                [](SurfaceSolution& s) { s.a += Rational(1); },
                [](SurfaceSolution& s) { s.b += Rational(2); },
                [](SurfaceSolution& s) { s.alpha1_over_alpha0 += Rational(1, 3); },
                [](SurfaceSolution& s) { s.alpha2_over_alpha0 += Rational(1); },
                [](SurfaceSolution& s) { s.trace_constant += Rational(1); },
                [](SurfaceSolution& s) { s.F += PoleSum(Rational(1, 5)); },
                [](SurfaceSolution& s) { s.scal += PoleSum(Rational(1, 9)); },
                [](SurfaceSolution& s) { s.gamma_class.m2 += Rational(1); },
            };
            for (const auto& mutate : mutations) {
                SurfaceSolution mutant = base;
                mutate(mutant);
                ++total;
                if (!verify_solution(mutant).overall) ++flipped;
            }
        }
        {
            ThreefoldConfig cfg;
            cfg.x1 = Rational(1, 2);
            cfg.x2 = Rational(-1, 3);
            cfg.s1 = Rational(2);
            cfg.s2 = Rational(0);
            cfg.a = Rational(1);
            cfg.b = Rational(4);
            cfg.k1 = 1;
            cfg.k2 = -1;
            const ThreefoldSolution base = build_threefold_solution(cfg);
            if (!verify_solution(base).overall) {
                out.ok = false;
                out.detail = "threefold base report does not pass";
                return out;
            }
            const std::vector<std::function<void(ThreefoldSolution&)>> mutations = {
                [](ThreefoldSolution& s) { s.kappa1 += Rational(1); },
                [](ThreefoldSolution& s) { s.kappa2 += Rational(1, 2); },
                [](ThreefoldSolution& s) { *s.alpha1_over_alpha0 += Rational(1, 6); },
                [](ThreefoldSolution& s) { *s.alpha2_over_alpha0 += Rational(1); },
                [](ThreefoldSolution& s) { *s.trace_constant += Rational(1); },
                [](ThreefoldSolution& s) { s.P += PoleSum(Rational(1, 3)); },
                [](ThreefoldSolution& s) { s.F += PoleSum(Rational(1, 3)); },
                [](ThreefoldSolution& s) { s.scal += PoleSum(Rational(1, 8)); },
                [](ThreefoldSolution& s) { s.omega_class->c1 += Rational(1); },
                [](ThreefoldSolution& s) { s.gamma_class->c3 += Rational(1); },
            };
            for (const auto& mutate : mutations) {
                ThreefoldSolution mutant = base;
                mutate(mutant);
                ++total;
                if (!verify_solution(mutant).overall) ++flipped;
            }
        }
        if (flipped != total) {
            out.ok = false;
            out.detail = std::to_string(total - flipped) + " mutations went undetected";
        }
        return out;
    });

    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
