#pragma once

#include <gmpxx.h>

#include "kym/rational.hpp"

namespace kym {

/// Second-cohomology class on the ruled surface, written m1*E0 + m2*C in the
/// basis of the zero section E0 (with E0.E0 = k) and the fiber C.
/// Intersection rules: E0.E0 = k, E0.C = 1, C.C = 0.
struct SurfaceClass {
    Rational m1;
    Rational m2;
    int k = 1;

    /// Pairing against E0: k*m1 + m2.
    Rational pair_e0() const { return Rational(static_cast<long>(k)) * m1 + m2; }
    /// Pairing against the fiber C: m1.
    Rational pair_c() const { return m1; }
    bool is_integral() const { return m1.is_integer() && m2.is_integer(); }

    friend bool operator==(const SurfaceClass&, const SurfaceClass&) = default;
};

/// Second-cohomology class on the projective bundle over a product of two
/// curves, in the primitive integer basis
/// { [omega_1/(2 pi k_1)], [omega_2/(2 pi k_2)], [eta/(4 pi)] }.
/// Integrality here means integer coordinates in that basis. The three
/// classes are primitive; whether they span the full integer lattice is not
/// established, so this is the operational criterion.
struct ThreefoldClass {
    Rational c1;
    Rational c2;
    Rational c3;
    int k1 = 1;
    int k2 = 1;

    bool is_integral() const {
        return c1.is_integer() && c2.is_integer() && c3.is_integer();
    }

    friend bool operator==(const ThreefoldClass&, const ThreefoldClass&) = default;
};

/// [omega/2pi] = 2 E0 + ((1-x)k/x) C with x = k/(k+k'), i.e. (2, k').
SurfaceClass surface_omega_class(int k, int kprime);

/// [gamma_{a,b}/2pi] in the (E0, C) basis for raw curvature parameters a, b.
SurfaceClass surface_gamma_class(int k, int kprime, const Rational& a, const Rational& b);

/// The sufficient integrality criterion: a integral and b an integer multiple
/// of (2k+k')k'/k^2. When true, surface_gamma_class has integer coordinates.
/// (The converse can fail off the k=k'=1 family, e.g. k=1, k'=2, a=0, b=4.)
bool surface_integrality_check(const Rational& a, const Rational& b, int k, int kprime);

/// [omega/2pi] coordinates (k1/x1, k2/x2, 2) in the primitive basis.
ThreefoldClass threefold_omega_class(const Rational& x1, const Rational& x2, int k1, int k2);

/// [alpha/2pi] coordinates in the primitive basis, from the fiber integrals
/// n = -4pi(x1+x2)/((1-x1^2)(1-x2^2)), m1 = m2 = 2pi(1+x1 x2)/(same).
ThreefoldClass threefold_alpha_class(const Rational& x1, const Rational& x2, int k1, int k2);

/// [gamma_{a,b}/2pi] = a*[omega/2pi] + b*[alpha/2pi].
ThreefoldClass threefold_gamma_class(const Rational& x1, const Rational& x2,
                                     const Rational& a, const Rational& b, int k1, int k2);

/// Minimal positive integer N such that N*[omega/2pi] has integer
/// coordinates (the rescaling the construction is entitled to ignore).
mpz_class minimal_integer_rescaling(const ThreefoldClass& cls);

}  // namespace kym
