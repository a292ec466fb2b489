#include "kym/cohomology.hpp"

#include <stdexcept>

namespace kym {

namespace {

void require_surface_params(int k, int kprime) {
    if (k < 1 || kprime < 1)
        throw std::invalid_argument("surface classes require k >= 1 and k' >= 1");
}

void require_threefold_params(const Rational& x1, const Rational& x2, int k1, int k2) {
    const Rational one{1};
    if (x1.is_zero() || x2.is_zero() || !(x1.abs() < one) || !(x2.abs() < one))
        throw std::invalid_argument("threefold classes require 0 < |x_i| < 1");
    if (x1 == x2) throw std::invalid_argument("threefold classes require x1 != x2");
    if (k1 == 0 || k2 == 0) throw std::invalid_argument("threefold classes require k_i != 0");
    if (x1.sign() != (k1 > 0 ? 1 : -1) || x2.sign() != (k2 > 0 ? 1 : -1))
        throw std::invalid_argument("threefold classes require sign(k_i) = sign(x_i)");
}

}  // namespace

SurfaceClass surface_omega_class(int k, int kprime) {
    require_surface_params(k, kprime);
    return {Rational(2), Rational(static_cast<long>(kprime)), k};
}

SurfaceClass surface_gamma_class(int k, int kprime, const Rational& a, const Rational& b) {
    require_surface_params(k, kprime);
    const Rational kk{static_cast<long>(k)};
    const Rational x = kk / Rational(static_cast<long>(k) + kprime);
    const Rational one{1};
    const Rational m1 = Rational(2) * (a * (one - x * x) - b * x * x) / (one - x * x);
    const Rational m2 = kk * (a * (one - x) * (one - x) + b * x * x) / (x * (one - x));
    return {m1, m2, k};
}

bool surface_integrality_check(const Rational& a, const Rational& b, int k, int kprime) {
    require_surface_params(k, kprime);
    if (!a.is_integer()) return false;
    const Rational kk{static_cast<long>(k)};
    const Rational multiple = Rational(2) * kk + Rational(static_cast<long>(kprime));
    return (b * kk * kk / (multiple * Rational(static_cast<long>(kprime)))).is_integer();
}

ThreefoldClass threefold_omega_class(const Rational& x1, const Rational& x2, int k1, int k2) {
    require_threefold_params(x1, x2, k1, k2);
    return {Rational(static_cast<long>(k1)) / x1, Rational(static_cast<long>(k2)) / x2,
            Rational(2), k1, k2};
}

ThreefoldClass threefold_alpha_class(const Rational& x1, const Rational& x2, int k1, int k2) {
    require_threefold_params(x1, x2, k1, k2);
    const Rational one{1};
    const Rational delta = (one - x1 * x1) * (one - x2 * x2);
    const Rational m = (one + x1 * x2) / delta;          // [alpha] / (2 pi) on omega_i
    const Rational n = Rational(-2) * (x1 + x2) / delta; // [alpha] / (2 pi) on eta/(4 pi)
    return {Rational(static_cast<long>(k1)) * m, Rational(static_cast<long>(k2)) * m, n,
            k1, k2};
}

ThreefoldClass threefold_gamma_class(const Rational& x1, const Rational& x2,
                                     const Rational& a, const Rational& b, int k1, int k2) {
    const ThreefoldClass omega = threefold_omega_class(x1, x2, k1, k2);
    const ThreefoldClass alpha = threefold_alpha_class(x1, x2, k1, k2);
    return {a * omega.c1 + b * alpha.c1, a * omega.c2 + b * alpha.c2,
            a * omega.c3 + b * alpha.c3, k1, k2};
}

mpz_class minimal_integer_rescaling(const ThreefoldClass& cls) {
    mpz_class l = cls.c1.den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), cls.c2.den().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), cls.c3.den().get_mpz_t());
    return l;
}

}  // namespace kym
