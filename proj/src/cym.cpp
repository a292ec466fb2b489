#include "kym/cym.hpp"

#include <cmath>

namespace kym {

namespace {

const Rational kOne{1};
const Rational kTwo{2};

// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1], by
// Newton iteration on the Legendre recurrence.
struct GaussRule {
    std::vector<double> nodes, weights;
};

GaussRule gauss_legendre(int n) {
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

const GaussRule& gl15() {
    static const GaussRule rule = gauss_legendre(15);
    return rule;
}

double panel(const std::function<double(double)>& f, double a, double b) {
    const GaussRule& r = gl15();
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double acc = 0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i)
        acc += r.weights[i] * f(mid + half * r.nodes[i]);
    return acc * half;
}

void refine(const std::function<double(double)>& f, double a, double b, double coarse,
            double tol_per_unit, int level, int max_levels, double& value, double& err) {
    const double mid = 0.5 * (a + b);
    const double left = panel(f, a, mid);
    const double right = panel(f, mid, b);
    const double disc = std::abs(coarse - (left + right));
    if (disc <= tol_per_unit * (b - a) || level >= max_levels) {
        if (level >= max_levels && disc > tol_per_unit * (b - a))
            throw QuadratureNotConverged("panel error " + std::to_string(disc) +
                                         " above tolerance at refinement cap");
        value += left + right;
        err += disc;
        return;
    }
    refine(f, a, mid, left, tol_per_unit, level + 1, max_levels, value, err);
    refine(f, mid, b, right, tol_per_unit, level + 1, max_levels, value, err);
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    int initial_panels, const QuadratureOptions& opts) {
    if (initial_panels < 1) throw std::invalid_argument("integrate_adaptive: panels < 1");
    // First pass for the scale of the integral, then a per-unit-length
    // absolute tolerance derived from the relative one.
    double scale = 0;
    const double h = (b - a) / initial_panels;
    for (int i = 0; i < initial_panels; ++i)
        scale += std::abs(panel(f, a + i * h, a + (i + 1) * h));
    const double tol_per_unit = opts.rel_tol * std::max(scale, 1e-300) / (b - a);
    double value = 0, err = 0;
    for (int i = 0; i < initial_panels; ++i) {
        const double pa = a + i * h;
        const double pb = a + (i + 1) * h;
        refine(f, pa, pb, panel(f, pa, pb), tol_per_unit, 0, opts.max_levels, value, err);
    }
    return {value, err};
}

double eval_double(const PoleSum& f, double z) {
    double acc = 0;
    const auto& cs = f.poly_part().coeffs();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * z + it->to_double();
    for (const auto& t : f.pole_terms())
        acc += t.coeff.to_double() / std::pow(1.0 + t.x.to_double() * z, t.order);
    return acc;
}

CymCoefficient surface_cym_coefficient(const Rational& r1, const Rational& r2,
                                       const Rational& a) {
    const Rational zc = kTwo * a;
    return {kOne - Rational(4) * r2 * r1 + Rational(8) * r1 * r1 * zc * zc, Family::surface,
            "surface"};
}

CymCoefficient surface_cym_coefficient(const SurfaceSolution& sol) {
    return surface_cym_coefficient(sol.alpha1_over_alpha0, sol.alpha2_over_alpha0, sol.a);
}

CymCoefficient threefold_cym_coefficient(const Rational& kappa1, const Rational& kappa2,
                                         const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::invalid_argument("threefold_cym_coefficient: b must be nonzero");
    const Rational b2 = b * b;
    return {kOne + (kappa1 * kappa2 + Rational(3, 2) * (a * a / b2) * kappa2 * kappa2) / b2,
            Family::threefold, "threefold"};
}

CymProblem make_cym_problem(const SurfaceSolution& sol) {
    CymProblem prob;
    prob.family = Family::surface;
    prob.xs = {sol.x};
    prob.ss = {sol.s_sigma};
    const auto [trace, lambda2] = surface_contractions(sol.x, sol.a, sol.b);
    // |F_A|^2 = |Lambda gamma|^2 - (1/2) Lambda^2(gamma ^ gamma)
    prob.fa_norm_sq = PoleSum(trace * trace) - lambda2.scaled(Rational(1, 2));
    prob.r1 = sol.alpha1_over_alpha0;
    prob.r2 = sol.alpha2_over_alpha0;
    prob.lambda_trace = trace;
    prob.trace_constant = sol.trace_constant;
    return prob;
}

CymProblem make_cym_problem(const ThreefoldSolution& sol) {
    if (!sol.alpha1_over_alpha0 || !sol.alpha2_over_alpha0 || !sol.trace_constant)
        throw std::invalid_argument("make_cym_problem: solution has no (a, b) data");
    CymProblem prob;
    prob.family = Family::threefold;
    prob.xs = {sol.config.x1, sol.config.x2};
    prob.ss = {sol.config.s1, sol.config.s2};
    const auto [trace, lambda2] = threefold_contractions(sol.config);
    prob.fa_norm_sq = PoleSum(trace * trace) - lambda2.scaled(Rational(1, 2));
    prob.r1 = *sol.alpha1_over_alpha0;
    prob.r2 = *sol.alpha2_over_alpha0;
    prob.lambda_trace = trace;
    prob.trace_constant = *sol.trace_constant;
    return prob;
}

namespace {

// Scal of the profile F for the problem's base data.
PoleSum scal_of(const CymProblem& prob, const PoleSum& F) {
    PoleSum scal;
    PoleSum second = F.derivative().derivative();
    for (std::size_t i = 0; i < prob.xs.size(); ++i) {
        scal += PoleSum::pole(prob.xs[i], 1, kTwo * prob.ss[i] * prob.xs[i]);
        second = second.divide_linear(prob.xs[i]);
    }
    return scal - second;
}

// w(z) = prod (1 + x_i z) / |x_i|
PoleSum fiber_weight(const CymProblem& prob) {
    Poly w{kOne};
    Rational scale{1};
    for (const auto& x : prob.xs) {
        w *= Poly::linear(kOne, x);
        scale *= x.abs();
    }
    return PoleSum(w.scaled(scale.reciprocal()));
}

}  // namespace

CymEvaluation cym_evaluate(const CymProblem& prob, const PoleSum& F, int samples,
                           const QuadratureOptions& opts) {
    if (samples < 16) throw std::invalid_argument("cym_evaluate: samples must be >= 16");
    const PoleSum scal = scal_of(prob, F);
    const PoleSum weight = fiber_weight(prob);
    const Rational two_r1 = kTwo * prob.r1;
    const Rational shift = prob.r2 - two_r1 * prob.trace_constant * prob.trace_constant;

    const PoleSum deviation = scal - prob.fa_norm_sq.scaled(two_r1);  // Scal - 2 r1 |F_A|^2

    const auto total_f = [&](double z) {
        const double d = eval_double(deviation, z);
        return (d * d + eval_double(prob.fa_norm_sq, z)) * eval_double(weight, z);
    };
    const PoleSum centered = deviation - PoleSum(shift);
    const auto square_f = [&](double z) {
        const double d = eval_double(centered, z);
        return d * d * eval_double(weight, z);
    };
    // Lambda F_A is a constant for the fixed curvature form, so the trace
    // integrand is the constant |Lambda gamma - zc|^2 (exactly zero at a
    // genuine solution).
    const double trace_dev = (prob.lambda_trace - prob.trace_constant).to_double();
    const auto trace_f = [&](double z) {
        return trace_dev * trace_dev * eval_double(weight, z);
    };

    CymEvaluation ev;
    ev.samples = samples;
    const QuadratureResult total = integrate_adaptive(total_f, -1.0, 1.0, samples, opts);
    const QuadratureResult square = integrate_adaptive(square_f, -1.0, 1.0, samples, opts);
    const QuadratureResult trace = integrate_adaptive(trace_f, -1.0, 1.0, samples, opts);
    ev.total = total.value;
    ev.term_square = square.value;
    ev.term_trace = trace.value;
    ev.quadrature_error_estimate = total.error_estimate + square.error_estimate + trace.error_estimate;
    return ev;
}

namespace {

MinimalityReport minimality_core(const CymProblem& prob, const CymCoefficient& coeff,
                                 const PoleSum& F, const std::vector<Rational>& eps_list,
                                 int samples, const QuadratureOptions& opts) {
    MinimalityReport report;
    report.coefficient = coeff;
    report.coefficient_positive = coeff.positive();
    const CymEvaluation base = cym_evaluate(prob, F, samples, opts);
    report.trace_term = base.term_trace;
    report.trace_term_relative = std::abs(base.term_trace) / std::max(1.0, std::abs(base.total));
    if (!report.coefficient_positive) return report;

    const Poly bump{kOne, Rational(0), Rational(-2), Rational(0), kOne};  // (1-z^2)^2
    for (const auto& eps : eps_list) {
        PerturbationTest test;
        test.eps = eps;
        const PoleSum perturbed = F + PoleSum(bump.scaled(eps));
        test.perturbed_profile_positive = certify_positivity(perturbed).positive;
        const CymEvaluation pe = cym_evaluate(prob, perturbed, samples, opts);
        test.cym_base = base.total;
        test.cym_perturbed = pe.total;
        test.combined_error = base.quadrature_error_estimate + pe.quadrature_error_estimate;
        test.passed = test.perturbed_profile_positive &&
                      (pe.total - base.total) > test.combined_error;
        report.perturbations.push_back(test);
    }
    return report;
}

}  // namespace

MinimalityReport minimality_report(const CymProblem& prob, const CymCoefficient& coeff,
                                   const PoleSum& F, const std::vector<Rational>& eps_list,
                                   int samples, const QuadratureOptions& opts) {
    return minimality_core(prob, coeff, F, eps_list, samples, opts);
}

MinimalityReport minimality_report(const SurfaceSolution& sol,
                                   const std::vector<Rational>& eps_list, int samples,
                                   const QuadratureOptions& opts) {
    return minimality_core(make_cym_problem(sol), surface_cym_coefficient(sol), sol.F,
                           eps_list, samples, opts);
}

MinimalityReport minimality_report(const ThreefoldSolution& sol,
                                   const std::vector<Rational>& eps_list, int samples,
                                   const QuadratureOptions& opts) {
    const CymCoefficient coeff =
        threefold_cym_coefficient(sol.kappa1, sol.kappa2, *sol.config.a, *sol.config.b);
    return minimality_core(make_cym_problem(sol), coeff, sol.F, eps_list, samples, opts);
}

}  // namespace kym
