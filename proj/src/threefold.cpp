#include "kym/threefold.hpp"

namespace kym {

namespace {

const Rational kOne{1};
const Rational kTwo{2};
const Rational kThree{3};

struct KappaRows {
    // row1: a1 kappa1 + b1 kappa2 = r1; row2 likewise.
    Rational a1, b1, r1;
    Rational a2, b2, r2;
};

KappaRows kappa_rows(const Rational& x1, const Rational& x2, const Rational& s1,
                     const Rational& s2) {
    const Rational p = x1 * x2;
    const Rational sum = x1 + x2;
    const Rational w1 = kOne - x1 * x1;
    const Rational w2 = kOne - x2 * x2;
    const Rational d = w1 * w1 * w2 * w2;
    KappaRows rows;
    rows.a1 = kOne + p / kThree;
    rows.b1 = (p.pow(3) + kTwo * p * p - x1 * x1 - p - x2 * x2) / d;
    rows.r1 = -kTwo * (kOne + p) - kTwo * (s1 * x1 + s2 * x2);
    rows.a2 = rows.a1 - sum / kThree;
    rows.b2 = rows.b1 + sum * (kTwo * p * p - x1 * x1 - x2 * x2) / d;
    rows.r2 = -kTwo * (kOne + p - sum) - kTwo * (s1 * x1 + s2 * x2) +
              kTwo / kThree * (s1 + s2) * p;
    return rows;
}

void require_x_range(const Rational& x1, const Rational& x2) {
    if (x1.is_zero() || x2.is_zero() || !(x1.abs() < kOne) || !(x2.abs() < kOne))
        throw std::invalid_argument("requires 0 < |x_i| < 1");
}

}  // namespace

void ThreefoldConfig::validate() const {
    require_x_range(x1, x2);
    if (x1 == x2) throw std::invalid_argument("ThreefoldConfig: requires x1 != x2");
    if (!(s1 * x1 < kTwo) || !(s2 * x2 < kTwo))
        throw std::invalid_argument("ThreefoldConfig: requires s_i x_i < 2");
    if (b && b->is_zero())
        throw std::invalid_argument("ThreefoldConfig: b must be nonzero when given");
    if (a.has_value() != b.has_value())
        throw std::invalid_argument("ThreefoldConfig: a and b must be given together");
    const auto check_k = [](const Rational& x, const Rational& s, int k, const char* name) {
        if (k == 0) throw std::invalid_argument(std::string("ThreefoldConfig: ") + name + " must be nonzero");
        if (x.sign() != (k > 0 ? 1 : -1))
            throw std::invalid_argument(std::string("ThreefoldConfig: sign(") + name + ") must match sign(x)");
        // genus h = 1 - s k / 2 must be a nonnegative integer
        const Rational h = kOne - s * Rational(static_cast<long>(k)) / kTwo;
        if (!h.is_integer() || h.sign() < 0)
            throw std::invalid_argument(std::string("ThreefoldConfig: ") + name +
                                        " inconsistent with s (genus not a nonnegative integer)");
    };
    if (k1) check_k(x1, s1, *k1, "k1");
    if (k2) check_k(x2, s2, *k2, "k2");
}

KappaSolution solve_kappa_system(const Rational& x1, const Rational& x2, const Rational& s1,
                                 const Rational& s2) {
    require_x_range(x1, x2);
    const KappaRows rows = kappa_rows(x1, x2, s1, s2);
    const Rational det = rows.a1 * rows.b2 - rows.a2 * rows.b1;
    if (!det.is_zero()) {
        const Rational kappa2 = (rows.a1 * rows.r2 - rows.a2 * rows.r1) / det;
        const Rational kappa1 = (rows.r1 - rows.b1 * kappa2) / rows.a1;
        return KappaUnique{kappa1, kappa2};
    }
    // Rank-1 coefficient matrix: rows are proportional (a1 = 1 + x1 x2 / 3
    // never vanishes in range). Consistent iff the right-hand sides are
    // proportional with the same factor.
    const Rational lambda = rows.a2 / rows.a1;
    if (!(rows.r2 == lambda * rows.r1)) return KappaInconsistent{};
    return KappaFamily{rows.r1 / rows.a1, -rows.b1 / rows.a1};
}

Rational kappa2_closed_form(const Rational& x1, const Rational& x2, const Rational& s1,
                            const Rational& s2) {
    require_x_range(x1, x2);
    const Rational sum = x1 + x2;
    if (sum.is_zero()) throw DegenerateDenominator{};
    const Rational w1 = kOne - x1 * x1;
    const Rational w2 = kOne - x2 * x2;
    const Rational x1sq = x1 * x1;
    const Rational x2sq = x2 * x2;
    const Rational num = kTwo * w1 * w1 * w2 * w2 *
                         (Rational(6) * sum - kThree * (s1 * x1sq + s2 * x2sq) +
                          (s1 + s2) * x1sq * x2sq);
    const Rational bracket = Rational(-4) * x1sq - x1 * x2 - x1.pow(3) * x2 -
                             Rational(4) * x2sq + Rational(8) * x1sq * x2sq -
                             x1 * x2.pow(3) + kThree * x1.pow(3) * x2.pow(3);
    return num / (kThree * sum * bracket);
}

std::pair<Rational, Rational> kappa_closed_forms_x1_half(const Rational& x) {
    if (!(Rational(-1) < x) || !(x < Rational(0)) || x == Rational(-1, 2))
        throw std::invalid_argument("kappa_closed_forms_x1_half: requires -1 < x < 0, x != -1/2");
    const Rational den = Rational(8) + Rational(5) * x + Rational(16) * x * x + x.pow(3);
    const Rational kappa1 =
        Rational(6) * (x - kTwo) * (kThree + kTwo * x + Rational(7) * x * x) / den;
    const Rational kappa2 = Rational(-9) * (kOne - x).pow(2) * (kOne + x).pow(2) *
                            (kOne + kTwo * x) / den;
    return {kappa1, kappa2};
}

PoleSum threefold_ode_rhs(const ThreefoldConfig& cfg, const Rational& kappa1,
                          const Rational& kappa2) {
    const Poly l1 = Poly::linear(kOne, cfg.x1);
    const Poly l2 = Poly::linear(kOne, cfg.x2);
    PoleSum rhs{l2.scaled(kTwo * cfg.s1 * cfg.x1) + l1.scaled(kTwo * cfg.s2 * cfg.x2) +
                (l1 * l2).scaled(kappa1)};
    const Rational c = kappa2 / (cfg.x1 - cfg.x2);
    rhs += PoleSum::pole(cfg.x1, 3, -c * cfg.x1.pow(3));
    rhs += PoleSum::pole(cfg.x2, 3, c * cfg.x2.pow(3));
    return rhs;
}

PoleSum build_P_unchecked(const ThreefoldConfig& cfg, const Rational& kappa1,
                          const Rational& kappa2) {
    const PoleSum rhs = threefold_ode_rhs(cfg, kappa1, kappa2);
    const Rational base = kTwo * (kOne - cfg.x1) * (kOne - cfg.x2);
    PoleSum P = rhs.antiderivative(Rational(-1));
    return P + PoleSum(base);
}

PoleSum build_P(const ThreefoldConfig& cfg, const Rational& kappa1, const Rational& kappa2) {
    PoleSum P = build_P_unchecked(cfg, kappa1, kappa2);
    const Rational want = -kTwo * (kOne + cfg.x1) * (kOne + cfg.x2);
    if (!(P.evaluate(kOne) == want))
        throw EndpointMismatch("P(1) != -2(1+x1)(1+x2): kappas do not solve the system");
    return P;
}

PoleSum build_F_threefold_unchecked(const PoleSum& P) {
    return P.antiderivative(Rational(-1));
}

PoleSum build_F_threefold(const PoleSum& P) {
    PoleSum F = build_F_threefold_unchecked(P);
    if (!F.evaluate(kOne).is_zero())
        throw EndpointMismatch("int_{-1}^{1} P != 0: kappas do not solve the system");
    return F;
}

PositivityCertificate certify_positivity(const PoleSum& F) {
    PositivityCertificate cert;
    if (F.is_zero()) return cert;
    const RationalForm form = F.to_rational();
    Poly reduced = form.num;
    const Poly at_plus1 = Poly::linear(Rational(-1), kOne);  // z - 1
    const Poly at_minus1 = Poly::linear(kOne, kOne);         // z + 1
    while (!reduced.is_zero() && reduced.evaluate(kOne).is_zero())
        reduced = reduced.divide_exact(at_plus1);
    while (!reduced.is_zero() && reduced.evaluate(Rational(-1)).is_zero())
        reduced = reduced.divide_exact(at_minus1);
    cert.interior = sturm_root_count(reduced, Rational(-1), kOne);
    cert.value_at_zero = F.evaluate(Rational(0));
    const int closed_count = cert.interior.root_count + (cert.interior.root_at_lo ? 1 : 0);
    cert.positive = closed_count == 0 && cert.value_at_zero.sign() > 0;

    const PoleSum P = F.derivative();
    cert.p_sign_at_lo = P.evaluate(Rational(-1)).sign();
    cert.p_sign_at_hi = P.evaluate(kOne).sign();
    const RationalForm pform = P.to_rational();
    if (!pform.num.is_zero())
        cert.p_sign_changes = sturm_count_open(pform.num, Rational(-1), kOne);
    return cert;
}

PoleSum threefold_scalar_curvature(const ThreefoldConfig& cfg, const PoleSum& F) {
    PoleSum scal = PoleSum::pole(cfg.x1, 1, kTwo * cfg.s1 * cfg.x1) +
                   PoleSum::pole(cfg.x2, 1, kTwo * cfg.s2 * cfg.x2);
    scal -= F.derivative().derivative().divide_linear(cfg.x1).divide_linear(cfg.x2);
    return scal;
}

std::pair<Rational, PoleSum> threefold_contractions(const Rational& x1, const Rational& x2,
                                                    const Rational& a, const Rational& b) {
    const Poly l1 = Poly::linear(kOne, x1);
    const Poly l2 = Poly::linear(kOne, x2);
    const Poly cross = l2.scaled(x1) + l1.scaled(x2);
    const Poly bracket = (l2 * l2).scaled(x1 * x1) + (l1 * l1).scaled(x2 * x2) + cross * cross;
    const PoleSum fraction =
        PoleSum(bracket) * PoleSum::pole(x1, 4, kOne) * PoleSum::pole(x2, 4, kOne);
    PoleSum lambda2{Poly(Rational(12) * a * a)};
    lambda2 -= fraction.scaled(kTwo * b * b);
    return {kThree * a, lambda2};
}

std::pair<Rational, PoleSum> threefold_contractions(const ThreefoldConfig& cfg) {
    if (!cfg.a || !cfg.b)
        throw std::invalid_argument("threefold_contractions: config has no (a, b)");
    return threefold_contractions(cfg.x1, cfg.x2, *cfg.a, *cfg.b);
}

namespace {

ThreefoldSolution assemble(const ThreefoldConfig& cfg, const Rational& kappa1,
                           const Rational& kappa2, bool checked) {
    ThreefoldSolution sol;
    sol.config = cfg;
    sol.kappa1 = kappa1;
    sol.kappa2 = kappa2;
    sol.P = checked ? build_P(cfg, kappa1, kappa2) : build_P_unchecked(cfg, kappa1, kappa2);
    sol.F = checked ? build_F_threefold(sol.P) : build_F_threefold_unchecked(sol.P);
    sol.scal = threefold_scalar_curvature(cfg, sol.F);
    sol.constant_scalar_curvature = sol.scal.is_polynomial() && sol.scal.poly_part().is_constant();
    if (cfg.a && cfg.b) {
        const Rational r1 = kappa2 / (Rational(4) * *cfg.b * *cfg.b);
        sol.alpha1_over_alpha0 = r1;
        sol.alpha2_over_alpha0 = Rational(12) * *cfg.a * *cfg.a * r1 - kappa1;
        sol.trace_constant = kThree * *cfg.a;
        if (checked) {
            // Master identity: Scal + r1 Lambda^2(gamma ^ gamma) - r2 = 0.
            const PoleSum lambda2 = threefold_contractions(cfg).second;
            const PoleSum residual =
                sol.scal + lambda2.scaled(r1) - PoleSum(*sol.alpha2_over_alpha0);
            if (!residual.is_zero())
                throw EndpointMismatch("coupled-equation residual is nonzero: " + residual.str());
        }
    }
    if (cfg.k1 && cfg.k2) {
        sol.omega_class = threefold_omega_class(cfg.x1, cfg.x2, *cfg.k1, *cfg.k2);
        if (cfg.a && cfg.b)
            sol.gamma_class =
                threefold_gamma_class(cfg.x1, cfg.x2, *cfg.a, *cfg.b, *cfg.k1, *cfg.k2);
    }
    sol.positivity_certificate = certify_positivity(sol.F);
    sol.positivity_holds = sol.positivity_certificate.positive;
    return sol;
}

}  // namespace

ThreefoldSolution build_threefold_solution(const ThreefoldConfig& cfg) {
    cfg.validate();
    const KappaSolution ks = solve_kappa_system(cfg.x1, cfg.x2, cfg.s1, cfg.s2);
    if (std::holds_alternative<KappaInconsistent>(ks)) throw InconsistentSystem{};
    if (std::holds_alternative<KappaFamily>(ks))
        throw std::invalid_argument(
            "build_threefold_solution: one-parameter family, supply a kappa2 choice");
    const auto& u = std::get<KappaUnique>(ks);
    return assemble(cfg, u.kappa1, u.kappa2, /*checked=*/true);
}

ThreefoldSolution build_threefold_solution(const ThreefoldConfig& cfg,
                                           const Rational& kappa2_choice) {
    cfg.validate();
    const KappaSolution ks = solve_kappa_system(cfg.x1, cfg.x2, cfg.s1, cfg.s2);
    if (std::holds_alternative<KappaInconsistent>(ks)) throw InconsistentSystem{};
    if (const auto* u = std::get_if<KappaUnique>(&ks)) {
        if (!(u->kappa2 == kappa2_choice))
            throw std::invalid_argument(
                "build_threefold_solution: system is determined; kappa2 choice conflicts");
        return assemble(cfg, u->kappa1, u->kappa2, /*checked=*/true);
    }
    const auto& fam = std::get<KappaFamily>(ks);
    return assemble(cfg, fam.kappa1_at(kappa2_choice), kappa2_choice, /*checked=*/true);
}

ThreefoldSolution build_threefold_solution_with_kappas(const ThreefoldConfig& cfg,
                                                       const Rational& kappa1,
                                                       const Rational& kappa2) {
    cfg.validate();
    return assemble(cfg, kappa1, kappa2, /*checked=*/false);
}

}  // namespace kym
