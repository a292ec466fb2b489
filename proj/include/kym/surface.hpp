#pragma once

#include <stdexcept>
#include <utility>

#include "kym/cohomology.hpp"
#include "kym/polesum.hpp"
#include "kym/sturm.hpp"

namespace kym {

/// Raised if the exact positivity certificate of a constructed momentum
/// profile fails. Unreachable for valid inputs; it would indicate a bug,
/// not a property of the parameters.
class PositivityFailure : public std::runtime_error {
public:
    explicit PositivityFailure(const std::string& what) : std::runtime_error(what) {}
};

/// Integer parameters of the ruled-surface family: the projectivization of
/// O + L over a genus-h curve, with deg L = k. The admissible-metric data
/// is derived: x = k/(k+k'), s_sigma = 2(1-h)/k, a = k1, b = k2(2k+k')k'/k^2.
struct SurfaceConfig {
    int k = 1;       // deg L, >= 1
    int kprime = 1;  // >= 1
    int k1 = 0;      // any integer
    int k2 = 1;      // nonzero
    int genus = 0;   // >= 0

    void validate() const;
    Rational x() const;
    Rational s_sigma() const;
    Rational a() const { return Rational(static_cast<long>(k1)); }
    Rational b() const;
};

/// Raw admissible-metric parameters; used by the low-level builder that does
/// not go through the integer family. Classes built from raw (a, b) need not
/// be integral.
struct SurfaceParams {
    Rational x;        // 0 < x < 1
    Rational s_sigma;  // s_sigma * x < 2
    Rational a;
    Rational b;        // nonzero

    void validate() const;
};

/// Everything the ruled-surface construction produces for one parameter
/// choice, verified exactly on construction: the momentum profile F, the
/// ratio constants, the scalar curvature, the classes of omega and
/// gamma_{a,b}, and the positivity certificate. `trace_constant` is the
/// topological constant 2a on the right of the first coupled equation
/// (not the momentum coordinate).
struct SurfaceSolution {
    SurfaceConfig config;
    /// False for solutions from the raw entry point, whose (a, b) do not
    /// come from the integer family; the verifier then treats the stored
    /// rational parameters as the inputs of record.
    bool from_integer_config = true;
    Rational x, s_sigma, a, b;
    PoleSum F;
    Rational alpha1_over_alpha0;
    Rational alpha2_over_alpha0;
    Rational trace_constant;
    PoleSum scal;
    SurfaceClass omega_class;
    SurfaceClass gamma_class;
    RootIsolation positivity_certificate;
};

/// The unique admissible solution for the given integer parameters.
SurfaceSolution build_surface_solution(const SurfaceConfig& cfg);

/// Low-level entry point on raw rational parameters. The resulting classes
/// are computed only when the parameters come from an integer config; this
/// variant leaves them at the a*omega + b*alpha values, possibly non-integral.
SurfaceSolution build_surface_solution_raw(int k, int kprime, int genus,
                                           const Rational& a, const Rational& b);

/// The momentum profile of Eq-type (1-z^2)(x^2(2+sx)z^2 + 8xz + 4+2x^2-sx^3)/(4(1+xz)).
PoleSum surface_momentum_profile(const Rational& x, const Rational& s_sigma);

/// The quadratic factor f(z) = x^2(2+sx)z^2 + 8xz + 4+2x^2-sx^3 of the profile.
Poly surface_profile_quadratic(const Rational& x, const Rational& s_sigma);

Rational surface_alpha1_ratio(const Rational& x, const Rational& s_sigma, const Rational& b);
Rational surface_alpha2_ratio(const Rational& x, const Rational& s_sigma,
                              const Rational& a, const Rational& b);

/// Right-hand side of the profile ODE:
/// 2 s x + 4 r1 (a^2 - b^2 x^4 (1+xz)^-4)(1+xz) - r2 (1+xz).
PoleSum surface_ode_rhs(const SurfaceParams& p, const Rational& r1, const Rational& r2);

/// Scal(g) = (2 s x - F'')/(1+xz), from the given profile.
PoleSum surface_scalar_curvature(const Rational& x, const Rational& s_sigma, const PoleSum& F);
PoleSum surface_scalar_curvature(const SurfaceConfig& cfg);

/// Closed form 3(2+sx)/2 - (2-sx)(1-x^2)^2 / (2(1+xz)^4).
PoleSum surface_scalar_curvature_closed_form(const Rational& x, const Rational& s_sigma);

/// (Lambda gamma, Lambda^2(gamma ^ gamma)) = (2a, 4(a^2 - b^2 x^4 (1+xz)^-4)).
std::pair<Rational, PoleSum> surface_contractions(const Rational& x, const Rational& a,
                                                  const Rational& b);

/// Sturm certificate that the profile's quadratic factor has no roots in
/// [-1, 1]; throws PositivityFailure on failure.
RootIsolation certify_surface_positivity(const Rational& x, const Rational& s_sigma,
                                         const PoleSum& F);

}  // namespace kym
