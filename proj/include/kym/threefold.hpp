#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>

#include "kym/cohomology.hpp"
#include "kym/polesum.hpp"
#include "kym/sturm.hpp"

namespace kym {

/// Raised when the exact endpoint identities of the profile construction
/// fail; signals kappa inputs that do not solve the linear system.
class EndpointMismatch : public std::runtime_error {
public:
    explicit EndpointMismatch(const std::string& what) : std::runtime_error(what) {}
};

/// kappa2 closed form is undefined on the x1 = -x2 locus.
class DegenerateDenominator : public std::domain_error {
public:
    DegenerateDenominator()
        : std::domain_error("kappa2 closed form degenerates at x1 = -x2") {}
};

/// The kappa linear system admits no solution for these parameters.
class InconsistentSystem : public std::runtime_error {
public:
    InconsistentSystem() : std::runtime_error("kappa linear system is inconsistent") {}
};

/// Parameters of the projective bundle over a product of two curves.
/// x_i are the admissible-metric parameters (0 < |x_i| < 1, x1 != x2,
/// s_i x_i < 2); a, b the curvature-form parameters of gamma_{a,b}
/// (optional: the kappa system does not depend on them); k_i the degrees
/// of the two line bundles, needed only for cohomology classes, with
/// sign(k_i) = sign(x_i) and genus h_i = 1 - s_i k_i / 2 a nonnegative
/// integer.
struct ThreefoldConfig {
    Rational x1, x2;
    Rational s1, s2;
    std::optional<Rational> a;
    std::optional<Rational> b;  // nonzero when present
    std::optional<int> k1, k2;

    void validate() const;
};

struct KappaUnique {
    Rational kappa1, kappa2;
};
struct KappaInconsistent {};
/// kappa1 = intercept + slope * kappa2, kappa2 free.
struct KappaFamily {
    Rational kappa1_intercept, kappa1_slope;
    Rational kappa1_at(const Rational& kappa2) const {
        return kappa1_intercept + kappa1_slope * kappa2;
    }
};
using KappaSolution = std::variant<KappaUnique, KappaInconsistent, KappaFamily>;

/// The 2x2 linear system the endpoint conditions impose on (kappa1, kappa2),
/// solved by exact rational elimination with rank-based classification of
/// the degenerate branches. Degeneracy is a variant, not an error.
KappaSolution solve_kappa_system(const Rational& x1, const Rational& x2,
                                 const Rational& s1, const Rational& s2);

/// Closed form for kappa2 on the unique branch; throws DegenerateDenominator
/// when x1 = -x2. Agrees with solve_kappa_system wherever both are defined.
Rational kappa2_closed_form(const Rational& x1, const Rational& x2,
                            const Rational& s1, const Rational& s2);

/// The printed specializations of (kappa1, kappa2) for the one-parameter
/// slice x1 = 1/2, s1 = 2, s2 = -2 with x2 = x in (-1, 0), x != -1/2.
std::pair<Rational, Rational> kappa_closed_forms_x1_half(const Rational& x);

/// Right-hand side of the profile equation for F'':
/// 2 s1 x1 (1+x2 z) + 2 s2 x2 (1+x1 z) + kappa1 (1+x1 z)(1+x2 z)
///   - kappa2 (x1^3 (1+x1 z)^-3 - x2^3 (1+x2 z)^-3)/(x1 - x2).
PoleSum threefold_ode_rhs(const ThreefoldConfig& cfg, const Rational& kappa1,
                          const Rational& kappa2);

/// P(t): the integrated right-hand side of the profile equation, based so
/// that P(-1) = 2(1-x1)(1-x2). Throws EndpointMismatch unless
/// P(1) = -2(1+x1)(1+x2) exactly.
PoleSum build_P(const ThreefoldConfig& cfg, const Rational& kappa1, const Rational& kappa2);
/// Same construction without the endpoint check (for surveying bad inputs).
PoleSum build_P_unchecked(const ThreefoldConfig& cfg, const Rational& kappa1,
                          const Rational& kappa2);

/// F = int_{-1}^z P; throws EndpointMismatch unless F(1) = 0 exactly.
PoleSum build_F_threefold(const PoleSum& P);
PoleSum build_F_threefold_unchecked(const PoleSum& P);

/// Exact positivity certificate for a momentum profile F vanishing at +-1:
/// the numerator with its roots at +-1 removed must have no further roots
/// in [-1, 1] and F(0) > 0. Also carries the sign-change diagnostic for
/// P = F': signs at the endpoints and the count of distinct interior roots.
struct PositivityCertificate {
    bool positive = false;
    RootIsolation interior;
    Rational value_at_zero;
    int p_sign_at_lo = 0;
    int p_sign_at_hi = 0;
    int p_sign_changes = 0;
};
PositivityCertificate certify_positivity(const PoleSum& F);

/// Scal(g) = 2 s1 x1/(1+x1 z) + 2 s2 x2/(1+x2 z) - F'' / ((1+x1 z)(1+x2 z)).
PoleSum threefold_scalar_curvature(const ThreefoldConfig& cfg, const PoleSum& F);

/// (Lambda gamma, Lambda^2(gamma ^ gamma)) for gamma_{a,b}; requires a, b.
std::pair<Rational, PoleSum> threefold_contractions(const ThreefoldConfig& cfg);
std::pair<Rational, PoleSum> threefold_contractions(const Rational& x1, const Rational& x2,
                                                    const Rational& a, const Rational& b);

/// A constructed (not necessarily positive) solution candidate. Failed
/// positivity is data (`positivity_holds`), not an error, so parameter
/// surveys can represent every candidate. alpha ratios, trace constant and
/// classes are present only when the config carries (a, b) resp. (k1, k2).
struct ThreefoldSolution {
    ThreefoldConfig config;
    Rational kappa1, kappa2;
    PoleSum P;
    PoleSum F;
    PoleSum scal;
    bool constant_scalar_curvature = false;
    std::optional<Rational> alpha1_over_alpha0;  // kappa2 / (4 b^2)
    std::optional<Rational> alpha2_over_alpha0;  // 12 a^2 (a1/a0) - kappa1
    std::optional<Rational> trace_constant;      // 3a
    std::optional<ThreefoldClass> omega_class;
    std::optional<ThreefoldClass> gamma_class;
    PositivityCertificate positivity_certificate;
    bool positivity_holds = false;
};

/// Builds the solution on the unique branch; throws InconsistentSystem on
/// the inconsistent branch and std::invalid_argument on the family branch
/// (which needs a kappa2 choice).
ThreefoldSolution build_threefold_solution(const ThreefoldConfig& cfg);

/// Family-branch entry: builds for the chosen kappa2 (kappa2 = 0 is the
/// constant-scalar-curvature member). On the unique branch the choice must
/// match the solved value.
ThreefoldSolution build_threefold_solution(const ThreefoldConfig& cfg,
                                           const Rational& kappa2_choice);

/// Unchecked assembly from explicit kappas; endpoint failures are left for
/// verification to surface. Meant for diagnostics and mutation testing.
ThreefoldSolution build_threefold_solution_with_kappas(const ThreefoldConfig& cfg,
                                                       const Rational& kappa1,
                                                       const Rational& kappa2);

}  // namespace kym
