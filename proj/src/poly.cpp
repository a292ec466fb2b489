#include "kym/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kym {

namespace {
const Rational kZero{0};
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::monomial(int degree, Rational coeff) {
    if (degree < 0) throw std::invalid_argument("Poly::monomial: negative degree");
    if (coeff.is_zero()) return Poly{};
    Poly p;
    p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, kZero);
    p.coeffs_.back() = std::move(coeff);
    return p;
}

Rational Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& Poly::leading() const {
    if (coeffs_.empty()) return kZero;
    return coeffs_.back();
}

Rational Poly::evaluate(const Rational& z) const {
    Rational acc{0};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), kZero);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), kZero);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly{};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational{0});
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
}

Poly Poly::scaled(const Rational& c) const {
    if (c.is_zero()) return Poly{};
    Poly r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return Poly{};
    std::vector<Rational> out(coeffs_.size() - 1, kZero);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        out[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(out));
}

Poly Poly::antiderivative() const {
    if (is_zero()) return Poly{};
    std::vector<Rational> out(coeffs_.size() + 1, kZero);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out[i + 1] = coeffs_[i] / Rational(static_cast<long>(i + 1));
    return Poly(std::move(out));
}

Poly Poly::compose_affine(const Rational& s, const Rational& t) const {
    // Horner on the affine argument.
    Poly acc;
    const Poly arg = Poly::linear(t, s);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * arg + Poly(*it);
    return acc;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("Poly::divmod: division by zero polynomial");
    Poly r = *this;
    Poly q;
    const int dd = d.degree();
    const Rational lead_inv = d.leading().reciprocal();
    while (!r.is_zero() && r.degree() >= dd) {
        const int k = r.degree() - dd;
        const Rational c = r.leading() * lead_inv;
        q += Poly::monomial(k, c);
        r -= d * Poly::monomial(k, c);
    }
    return {q, r};
}

Poly Poly::divide_exact(const Poly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw std::domain_error("Poly::divide_exact: nonzero remainder");
    return q;
}

bool Poly::divisible_by(const Poly& d) const {
    if (d.is_zero()) return false;
    return divmod(d).second.is_zero();
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
        // Keep coefficients tame: remainders stay monic.
        if (!b.is_zero()) b = b.scaled(b.leading().reciprocal());
    }
    if (a.is_zero()) return a;
    return a.scaled(a.leading().reciprocal());
}

Poly Poly::squarefree_part() const {
    if (is_zero() || degree() == 0) return *this;
    const Poly g = gcd(*this, derivative());
    return divide_exact(g);
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational c = coeff(i);
        if (c.is_zero()) continue;
        if (!first) out << (c.sign() > 0 ? " + " : " - ");
        else if (c.sign() < 0) out << "-";
        first = false;
        const Rational a = c.abs();
        if (i == 0 || !a.is_one()) out << a.str();
        if (i > 0) {
            if (!a.is_one()) out << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

}  // namespace kym
