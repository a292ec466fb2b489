#include "kym/surface.hpp"

namespace kym {

namespace {

const Rational kOne{1};
const Rational kTwo{2};

SurfaceParams params_from(const Rational& x, const Rational& s, const Rational& a,
                          const Rational& b) {
    SurfaceParams p{x, s, a, b};
    p.validate();
    return p;
}

}  // namespace

void SurfaceConfig::validate() const {
    if (k < 1) throw std::invalid_argument("SurfaceConfig: k must be >= 1");
    if (kprime < 1) throw std::invalid_argument("SurfaceConfig: k' must be >= 1");
    if (k2 == 0) throw std::invalid_argument("SurfaceConfig: k2 must be nonzero");
    if (genus < 0) throw std::invalid_argument("SurfaceConfig: genus must be >= 0");
}

Rational SurfaceConfig::x() const {
    return Rational(static_cast<long>(k), static_cast<long>(k) + kprime);
}

Rational SurfaceConfig::s_sigma() const {
    return Rational(2L * (1 - genus), static_cast<long>(k));
}

Rational SurfaceConfig::b() const {
    const Rational kk{static_cast<long>(k)};
    return Rational(static_cast<long>(k2)) *
           (kTwo * kk + Rational(static_cast<long>(kprime))) *
           Rational(static_cast<long>(kprime)) / (kk * kk);
}

void SurfaceParams::validate() const {
    if (!(Rational(0) < x) || !(x < kOne))
        throw std::invalid_argument("SurfaceParams: requires 0 < x < 1");
    if (!(s_sigma * x < kTwo))
        throw std::invalid_argument("SurfaceParams: requires s_sigma * x < 2");
    if (b.is_zero())
        throw std::invalid_argument("SurfaceParams: requires b != 0");
}

Poly surface_profile_quadratic(const Rational& x, const Rational& s_sigma) {
    const Rational sx = s_sigma * x;
    return Poly{Rational(4) + kTwo * x * x - sx * x * x,  // 4 + 2x^2 - s x^3
                Rational(8) * x,
                x * x * (kTwo + sx)};
}

PoleSum surface_momentum_profile(const Rational& x, const Rational& s_sigma) {
    const Poly one_minus_z2{kOne, Rational(0), Rational(-1)};
    const Poly num = one_minus_z2 * surface_profile_quadratic(x, s_sigma);
    return PoleSum(num.scaled(Rational(1, 4))).divide_linear(x);
}

Rational surface_alpha1_ratio(const Rational& x, const Rational& s_sigma, const Rational& b) {
    const Rational w = kOne - x * x;
    return -(w * w * (kTwo - s_sigma * x)) / (Rational(8) * b * b * x.pow(4));
}

Rational surface_alpha2_ratio(const Rational& x, const Rational& s_sigma,
                              const Rational& a, const Rational& b) {
    const Rational w = kOne - x * x;
    const Rational b2x4 = b * b * x.pow(4);
    return (Rational(3) * b2x4 * (kTwo + s_sigma * x) - a * a * (kTwo - s_sigma * x) * w * w) /
           (kTwo * b2x4);
}

PoleSum surface_ode_rhs(const SurfaceParams& p, const Rational& r1, const Rational& r2) {
    const Poly lin = Poly::linear(kOne, p.x);
    // 4 r1 (a^2 - b^2 x^4 (1+xz)^-4)(1+xz) = 4 r1 a^2 (1+xz) - 4 r1 b^2 x^4 (1+xz)^-3
    PoleSum rhs{PoleSum(Poly(Rational(kTwo * p.s_sigma * p.x)))};
    rhs += PoleSum(lin.scaled(Rational(4) * r1 * p.a * p.a - r2));
    rhs += PoleSum::pole(p.x, 3, Rational(-4) * r1 * p.b * p.b * p.x.pow(4));
    return rhs;
}

PoleSum surface_scalar_curvature(const Rational& x, const Rational& s_sigma, const PoleSum& F) {
    PoleSum num = PoleSum(Poly(kTwo * s_sigma * x)) - F.derivative().derivative();
    return num.divide_linear(x);
}

PoleSum surface_scalar_curvature(const SurfaceConfig& cfg) {
    cfg.validate();
    return surface_scalar_curvature(cfg.x(), cfg.s_sigma(),
                                    surface_momentum_profile(cfg.x(), cfg.s_sigma()));
}

PoleSum surface_scalar_curvature_closed_form(const Rational& x, const Rational& s_sigma) {
    const Rational sx = s_sigma * x;
    const Rational w = kOne - x * x;
    PoleSum scal{Poly(Rational(3) * (kTwo + sx) / kTwo)};
    scal += PoleSum::pole(x, 4, -(kTwo - sx) * w * w / kTwo);
    return scal;
}

std::pair<Rational, PoleSum> surface_contractions(const Rational& x, const Rational& a,
                                                  const Rational& b) {
    PoleSum lambda2{Poly(Rational(4) * a * a)};
    lambda2 += PoleSum::pole(x, 4, Rational(-4) * b * b * x.pow(4));
    return {kTwo * a, lambda2};
}

RootIsolation certify_surface_positivity(const Rational& x, const Rational& s_sigma,
                                         const PoleSum& F) {
    // F = (1-z^2) f(z) / (4(1+xz)): strip the forced (1-z^2) factor and
    // certify the leftover factor has no roots in the closed interval.
    const RationalForm form = F.to_rational();
    const Poly one_minus_z2{kOne, Rational(0), Rational(-1)};
    const Poly quartic = form.num.divide_exact(one_minus_z2);
    RootIsolation cert = sturm_root_count(quartic, Rational(-1), kOne);
    const int closed_count = cert.root_count + (cert.root_at_lo ? 1 : 0);
    if (closed_count != 0 || !(quartic.evaluate(Rational(0)).sign() > 0))
        throw PositivityFailure("surface momentum profile is not positive on (-1, 1): " +
                                quartic.str());
    // Exact facts the positivity argument rests on.
    const Poly f = surface_profile_quadratic(x, s_sigma);
    const Rational one_minus_x = kOne - x;
    const Rational one_plus_x = kOne + x;
    if (!(f.evaluate(Rational(-1)) == Rational(4) * one_minus_x * one_minus_x) ||
        !(f.evaluate(kOne) == Rational(4) * one_plus_x * one_plus_x))
        throw PositivityFailure("profile quadratic endpoint identities failed");
    return cert;
}

namespace {

SurfaceSolution build_internal(const SurfaceConfig& cfg, const SurfaceParams& p,
                               SurfaceClass omega, SurfaceClass gamma) {
    SurfaceSolution sol;
    sol.config = cfg;
    sol.x = p.x;
    sol.s_sigma = p.s_sigma;
    sol.a = p.a;
    sol.b = p.b;
    sol.F = surface_momentum_profile(p.x, p.s_sigma);
    sol.alpha1_over_alpha0 = surface_alpha1_ratio(p.x, p.s_sigma, p.b);
    sol.alpha2_over_alpha0 = surface_alpha2_ratio(p.x, p.s_sigma, p.a, p.b);
    sol.trace_constant = kTwo * p.a;
    sol.scal = surface_scalar_curvature(p.x, p.s_sigma, sol.F);
    sol.omega_class = std::move(omega);
    sol.gamma_class = std::move(gamma);

    // Verify the solution invariants exactly before returning.
    const Rational m1{-1};
    if (!sol.F.evaluate(kOne).is_zero() || !sol.F.evaluate(m1).is_zero())
        throw PositivityFailure("profile does not vanish at the endpoints");
    const PoleSum dF = sol.F.derivative();
    if (!(dF.evaluate(kOne) == -kTwo * (kOne + p.x)) ||
        !(dF.evaluate(m1) == kTwo * (kOne - p.x)))
        throw PositivityFailure("profile endpoint slopes are wrong");
    const PoleSum residual =
        dF.derivative() - surface_ode_rhs(p, sol.alpha1_over_alpha0, sol.alpha2_over_alpha0);
    if (!residual.is_zero())
        throw PositivityFailure("profile ODE residual is nonzero: " + residual.str());
    if (!(sol.alpha1_over_alpha0.sign() < 0))
        throw PositivityFailure("alpha1/alpha0 must be negative");
    if (!(sol.scal == surface_scalar_curvature_closed_form(p.x, p.s_sigma)))
        throw PositivityFailure("scalar curvature closed form mismatch");
    sol.positivity_certificate = certify_surface_positivity(p.x, p.s_sigma, sol.F);
    return sol;
}

}  // namespace

SurfaceSolution build_surface_solution(const SurfaceConfig& cfg) {
    cfg.validate();
    const SurfaceParams p = params_from(cfg.x(), cfg.s_sigma(), cfg.a(), cfg.b());
    return build_internal(cfg, p, surface_omega_class(cfg.k, cfg.kprime),
                          surface_gamma_class(cfg.k, cfg.kprime, p.a, p.b));
}

SurfaceSolution build_surface_solution_raw(int k, int kprime, int genus,
                                           const Rational& a, const Rational& b) {
    SurfaceConfig cfg;
    cfg.k = k;
    cfg.kprime = kprime;
    cfg.genus = genus;
    cfg.k1 = 0;
    cfg.k2 = 1;  // placeholder; raw a, b below are authoritative
    if (k < 1 || kprime < 1 || genus < 0)
        throw std::invalid_argument("build_surface_solution_raw: bad base parameters");
    const Rational x = cfg.x();
    const Rational s = cfg.s_sigma();
    const SurfaceParams p = params_from(x, s, a, b);
    SurfaceSolution sol = build_internal(cfg, p, surface_omega_class(k, kprime),
                                         surface_gamma_class(k, kprime, a, b));
    sol.from_integer_config = false;
    return sol;
}

}  // namespace kym
