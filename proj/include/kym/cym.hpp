#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kym/polesum.hpp"
#include "kym/surface.hpp"
#include "kym/threefold.hpp"

namespace kym {

class QuadratureNotConverged : public std::runtime_error {
public:
    explicit QuadratureNotConverged(const std::string& what) : std::runtime_error(what) {}
};

enum class Family { surface, threefold };

/// The exact coefficient in front of the trace term of the functional
/// decomposition; a positive value certifies that coupled solutions are
/// absolute minima.
struct CymCoefficient {
    Rational value;
    Family family = Family::surface;
    std::string context;

    bool positive() const { return value.sign() > 0; }
};

/// surface: 1 - 4 (a2/a0)(a1/a0) + 8 (a1/a0)^2 |2a|^2.
CymCoefficient surface_cym_coefficient(const Rational& r1, const Rational& r2,
                                       const Rational& a);
CymCoefficient surface_cym_coefficient(const SurfaceSolution& sol);

/// threefold: 1 + (kappa1 kappa2 + (3/2)(a^2/b^2) kappa2^2) / b^2.
CymCoefficient threefold_cym_coefficient(const Rational& kappa1, const Rational& kappa2,
                                         const Rational& a, const Rational& b);

/// Everything the 1-D reduction of the functional needs: the base curvature
/// data, the bundle contraction |F_A|^2(z) (independent of the profile),
/// the ratio constants and the trace constant. The fiber weight is
/// w(z) = prod (1 + x_i z) / |x_i|; all values are reported up to the fixed
/// positive base-volume constant, which cancels from every comparison.
struct CymProblem {
    Family family = Family::surface;
    std::vector<Rational> xs;
    std::vector<Rational> ss;
    PoleSum fa_norm_sq;
    Rational r1, r2;
    Rational lambda_trace;    // Lambda of the fixed curvature form (2a / 3a)
    Rational trace_constant;  // the claimed topological constant z_c
};

CymProblem make_cym_problem(const SurfaceSolution& sol);
CymProblem make_cym_problem(const ThreefoldSolution& sol);

struct QuadratureOptions {
    double rel_tol = 1e-10;
    int max_levels = 20;
};

/// Functional value for the profile F:
///   total       = int [ (Scal_F - 2 r1 |F_A|^2)^2 + |F_A|^2 ] w dz
///   term_square = ||Scal_F - 2 r1 |F_A|^2 - r2 + 2 r1 zc^2||^2
///   term_trace  = ||Lambda F_A - zc||^2   (identically zero in this family)
/// Every float carries the quadrature error estimate; `samples` is the
/// number of initial uniform panels (>= 16), each refined adaptively.
struct CymEvaluation {
    double total = 0;
    double term_square = 0;
    double term_trace = 0;
    double quadrature_error_estimate = 0;
    int samples = 0;
};

CymEvaluation cym_evaluate(const CymProblem& prob, const PoleSum& F, int samples,
                           const QuadratureOptions& opts = {});

struct PerturbationTest {
    Rational eps;
    double cym_base = 0;
    double cym_perturbed = 0;
    double combined_error = 0;
    bool perturbed_profile_positive = false;
    bool passed = false;
};

struct MinimalityReport {
    CymCoefficient coefficient;
    bool coefficient_positive = false;
    std::vector<PerturbationTest> perturbations;  // empty when not positive
    double trace_term = 0;
    double trace_term_relative = 0;  // |term_trace| / max(1, |total|)
};

/// Compares the functional at F against the admissible perturbations
/// F + eps (1-z^2)^2, which preserve the endpoint conditions identically;
/// positivity of each perturbed profile is re-certified exactly first.
MinimalityReport minimality_report(const CymProblem& prob, const CymCoefficient& coeff,
                                   const PoleSum& F, const std::vector<Rational>& eps_list,
                                   int samples, const QuadratureOptions& opts = {});
MinimalityReport minimality_report(const SurfaceSolution& sol,
                                   const std::vector<Rational>& eps_list, int samples,
                                   const QuadratureOptions& opts = {});
MinimalityReport minimality_report(const ThreefoldSolution& sol,
                                   const std::vector<Rational>& eps_list, int samples,
                                   const QuadratureOptions& opts = {});

/// Double-precision evaluation of an exact PoleSum (numerics live here, not
/// in the exact layer).
double eval_double(const PoleSum& f, double z);

struct QuadratureResult {
    double value = 0;
    double error_estimate = 0;
};

/// Adaptive Gauss-Legendre integration on [a, b]: 15-point panels bisected
/// until the coarse/fine discrepancy meets the tolerance. Deterministic
/// traversal, so results are bit-reproducible for a fixed plan.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    int initial_panels, const QuadratureOptions& opts = {});

}  // namespace kym
