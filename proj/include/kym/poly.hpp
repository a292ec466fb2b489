#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "kym/rational.hpp"

namespace kym {

/// Univariate polynomial over the rationals, dense representation,
/// coefficient of z^i at index i. The leading coefficient is nonzero
/// unless the polynomial is zero (empty coefficient vector).
class Poly {
public:
    Poly() = default;
    explicit Poly(Rational c) { coeffs_.push_back(std::move(c)); trim(); }
    Poly(std::initializer_list<Rational> low_to_high)
        : coeffs_(low_to_high) { trim(); }
    explicit Poly(std::vector<Rational> low_to_high)
        : coeffs_(std::move(low_to_high)) { trim(); }

    static Poly monomial(int degree, Rational coeff);
    /// c0 + c1*z
    static Poly linear(Rational c0, Rational c1) { return Poly({std::move(c0), std::move(c1)}); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(int k) const;
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational evaluate(const Rational& z) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly scaled(const Rational& c) const;

    Poly derivative() const;
    /// Antiderivative with zero constant term.
    Poly antiderivative() const;
    /// p(s*z + t)
    Poly compose_affine(const Rational& s, const Rational& t) const;

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    /// Exact division; throws std::domain_error if the remainder is nonzero.
    Poly divide_exact(const Poly& d) const;
    /// True iff d divides this exactly.
    bool divisible_by(const Poly& d) const;

    /// Monic gcd (1 for coprime inputs; 0 only if both are zero).
    static Poly gcd(Poly a, Poly b);
    /// p / gcd(p, p'); same roots, all simple, leading sign preserved.
    Poly squarefree_part() const;

    std::string str(const std::string& var = "z") const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();
    std::vector<Rational> coeffs_;
};

}  // namespace kym
