#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "kym/poly.hpp"

namespace kym {

/// Raised when an antiderivative would need a logarithm (an order-1 pole).
/// That never happens for the curvature quantities in scope, so it is a hard
/// error rather than an approximation.
class LogarithmRequired : public std::domain_error {
public:
    LogarithmRequired() : std::domain_error("antiderivative of an order-1 pole requires a logarithm") {}
};

/// One term coeff * (1 + x*z)^(-order). The constraint 0 < |x| < 1 keeps the
/// pole z = -1/x strictly outside [-1, 1].
struct PoleTerm {
    Rational x;
    int order = 1;
    Rational coeff;
};

/// Numerator/denominator form of a PoleSum; den = prod (1+x_i z)^(max order)
/// has constant term 1 and is positive on [-1, 1].
struct RationalForm {
    Poly num;
    Poly den;
};

/// Function of the momentum coordinate of the form
///
///     poly(z) + sum_i c_i * (1 + x_i z)^(-j_i),        0 < |x_i| < 1,
///
/// the closed class in which every curvature quantity in scope lives.
/// The representation is canonical: terms with equal (x, order) are merged,
/// zero coefficients dropped, and terms sorted by (x, order), so two
/// PoleSums are equal iff they are field-wise equal.
class PoleSum {
public:
    PoleSum() = default;
    explicit PoleSum(Poly p) : poly_(std::move(p)) {}
    explicit PoleSum(Rational c) : poly_(Poly(std::move(c))) {}

    static PoleSum pole(Rational x, int order, Rational coeff);

    const Poly& poly_part() const { return poly_; }
    const std::vector<PoleTerm>& pole_terms() const { return poles_; }
    bool is_zero() const { return poly_.is_zero() && poles_.empty(); }
    bool is_polynomial() const { return poles_.empty(); }

    PoleSum operator-() const;
    PoleSum& operator+=(const PoleSum& o);
    PoleSum& operator-=(const PoleSum& o);
    friend PoleSum operator+(PoleSum a, const PoleSum& b) { return a += b; }
    friend PoleSum operator-(PoleSum a, const PoleSum& b) { return a -= b; }
    friend PoleSum operator*(const PoleSum& a, const PoleSum& b);
    PoleSum scaled(const Rational& c) const;
    PoleSum times_poly(const Poly& m) const;

    /// Exact d/dz: (x, j, c) -> (x, j+1, -j*x*c).
    PoleSum derivative() const;
    /// g with g' = *this and g(base_point) = 0. Requires every pole order >= 2;
    /// throws LogarithmRequired otherwise.
    PoleSum antiderivative(const Rational& base_point) const;
    /// Exact division by (1 + x*z), 0 < |x| < 1.
    PoleSum divide_linear(const Rational& x) const;

    /// Exact value; throws std::domain_error at a pole location.
    Rational evaluate(const Rational& z) const;

    RationalForm to_rational() const;

    std::string str(const std::string& var = "z") const;

    friend bool operator==(const PoleSum& a, const PoleSum& b) {
        if (!(a.poly_ == b.poly_) || a.poles_.size() != b.poles_.size()) return false;
        for (std::size_t i = 0; i < a.poles_.size(); ++i) {
            if (!(a.poles_[i].x == b.poles_[i].x) || a.poles_[i].order != b.poles_[i].order ||
                !(a.poles_[i].coeff == b.poles_[i].coeff))
                return false;
        }
        return true;
    }

private:
    void normalize();

    Poly poly_;
    std::vector<PoleTerm> poles_;
};

}  // namespace kym
