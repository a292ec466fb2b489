#include "kym/polesum.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

namespace kym {

namespace {

void require_valid_pole(const Rational& x, int order) {
    if (x.is_zero() || !(x.abs() < Rational(1)))
        throw std::invalid_argument("PoleTerm: pole parameter must satisfy 0 < |x| < 1");
    if (order < 1) throw std::invalid_argument("PoleTerm: order must be >= 1");
}

// p(z) * (1+x z)^(-j) reduced to canonical form, scaled by c. Substituting
// u = 1 + x z turns the reduction into splitting a u-polynomial at u^j.
void reduce_poly_over_pole(const Poly& p, const Rational& x, int j, const Rational& c,
                           Poly& poly_out, std::vector<PoleTerm>& poles_out) {
    if (p.is_zero() || c.is_zero()) return;
    const Rational inv_x = x.reciprocal();
    const Poly q = p.compose_affine(inv_x, -inv_x);  // q(u) = p((u-1)/x)
    Poly high;                                       // sum_{k>=j} q_k u^(k-j)
    for (int k = j; k <= q.degree(); ++k)
        high += Poly::monomial(k - j, q.coeff(k));
    if (!high.is_zero())
        poly_out += high.compose_affine(x, Rational(1)).scaled(c);
    for (int k = 0; k < j && k <= q.degree(); ++k) {
        const Rational qk = q.coeff(k);
        if (!qk.is_zero()) poles_out.push_back({x, j - k, qk * c});
    }
}

// Partial fractions of c1*c2 * (1+x1 z)^(-j) (1+x2 z)^(-k), x1 != x2.
// The x1-side coefficients are the Taylor coefficients of (1+x2 z)^(-k)
// in powers of w = 1 + x1 z, and symmetrically for the x2 side; the
// numerator has degree 0, so there is no polynomial part.
void expand_pole_product(const PoleTerm& t1, const PoleTerm& t2,
                         std::vector<PoleTerm>& out) {
    const Rational c = t1.coeff * t2.coeff;
    const auto side = [&out, &c](const Rational& x1, int j, const Rational& x2, int k) {
        const Rational base = (x1 - x2) / x1;           // 1+x2 z = base*(1 + d w)
        const Rational d = x2 / (x1 - x2);
        const Rational base_pow = base.pow(-k);
        Rational d_pow{1};
        for (int m = 0; m < j; ++m) {
            const Rational g =
                base_pow * binomial(static_cast<unsigned long>(k + m - 1),
                                    static_cast<unsigned long>(m)) *
                d_pow * Rational(m % 2 == 0 ? 1 : -1);
            out.push_back({x1, j - m, g * c});
            d_pow *= d;
        }
    };
    side(t1.x, t1.order, t2.x, t2.order);
    side(t2.x, t2.order, t1.x, t1.order);
}

}  // namespace

PoleSum PoleSum::pole(Rational x, int order, Rational coeff) {
    require_valid_pole(x, order);
    PoleSum r;
    if (!coeff.is_zero()) r.poles_.push_back({std::move(x), order, std::move(coeff)});
    return r;
}

void PoleSum::normalize() {
    std::sort(poles_.begin(), poles_.end(), [](const PoleTerm& a, const PoleTerm& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.order < b.order;
    });
    std::vector<PoleTerm> merged;
    for (auto& t : poles_) {
        if (!merged.empty() && merged.back().x == t.x && merged.back().order == t.order)
            merged.back().coeff += t.coeff;
        else
            merged.push_back(std::move(t));
    }
    poles_.clear();
    for (auto& t : merged)
        if (!t.coeff.is_zero()) poles_.push_back(std::move(t));
}

PoleSum PoleSum::operator-() const {
    PoleSum r;
    r.poly_ = -poly_;
    r.poles_ = poles_;
    for (auto& t : r.poles_) t.coeff = -t.coeff;
    return r;
}

PoleSum& PoleSum::operator+=(const PoleSum& o) {
    poly_ += o.poly_;
    poles_.insert(poles_.end(), o.poles_.begin(), o.poles_.end());
    normalize();
    return *this;
}

PoleSum& PoleSum::operator-=(const PoleSum& o) { return *this += -o; }

PoleSum operator*(const PoleSum& a, const PoleSum& b) {
    PoleSum r;
    r.poly_ = a.poly_ * b.poly_;
    for (const auto& t : b.poles_)
        reduce_poly_over_pole(a.poly_, t.x, t.order, t.coeff, r.poly_, r.poles_);
    for (const auto& t : a.poles_)
        reduce_poly_over_pole(b.poly_, t.x, t.order, t.coeff, r.poly_, r.poles_);
    for (const auto& s : a.poles_) {
        for (const auto& t : b.poles_) {
            if (s.x == t.x)
                r.poles_.push_back({s.x, s.order + t.order, s.coeff * t.coeff});
            else
                expand_pole_product(s, t, r.poles_);
        }
    }
    r.normalize();
    return r;
}

PoleSum PoleSum::scaled(const Rational& c) const {
    if (c.is_zero()) return PoleSum{};
    PoleSum r;
    r.poly_ = poly_.scaled(c);
    r.poles_ = poles_;
    for (auto& t : r.poles_) t.coeff *= c;
    return r;
}

PoleSum PoleSum::times_poly(const Poly& m) const {
    PoleSum r;
    r.poly_ = poly_ * m;
    for (const auto& t : poles_)
        reduce_poly_over_pole(m, t.x, t.order, t.coeff, r.poly_, r.poles_);
    r.normalize();
    return r;
}

PoleSum PoleSum::derivative() const {
    PoleSum r;
    r.poly_ = poly_.derivative();
    for (const auto& t : poles_)
        r.poles_.push_back({t.x, t.order + 1,
                            -Rational(static_cast<long>(t.order)) * t.x * t.coeff});
    r.normalize();
    return r;
}

PoleSum PoleSum::antiderivative(const Rational& base_point) const {
    for (const auto& t : poles_)
        if (t.order == 1) throw LogarithmRequired{};
    PoleSum g;
    g.poly_ = poly_.antiderivative();
    for (const auto& t : poles_) {
        // d/dz (1+xz)^(1-j) = (1-j) x (1+xz)^(-j)
        const Rational c = t.coeff / (Rational(static_cast<long>(1 - t.order)) * t.x);
        g.poles_.push_back({t.x, t.order - 1, c});
    }
    g.normalize();
    const Rational offset = g.evaluate(base_point);
    g.poly_ -= Poly(offset);
    return g;
}

PoleSum PoleSum::divide_linear(const Rational& x) const {
    require_valid_pole(x, 1);
    PoleSum r;
    reduce_poly_over_pole(poly_, x, 1, Rational(1), r.poly_, r.poles_);
    const PoleTerm unit{x, 1, Rational(1)};
    for (const auto& t : poles_) {
        if (t.x == x)
            r.poles_.push_back({t.x, t.order + 1, t.coeff});
        else
            expand_pole_product(t, unit, r.poles_);
    }
    r.normalize();
    return r;
}

Rational PoleSum::evaluate(const Rational& z) const {
    Rational acc = poly_.evaluate(z);
    for (const auto& t : poles_) {
        const Rational lin = Rational(1) + t.x * z;
        if (lin.is_zero()) throw std::domain_error("PoleSum: evaluation at a pole");
        acc += t.coeff * lin.pow(-t.order);
    }
    return acc;
}

RationalForm PoleSum::to_rational() const {
    std::map<Rational, int> max_order;
    for (const auto& t : poles_) {
        auto [it, inserted] = max_order.emplace(t.x, t.order);
        if (!inserted) it->second = std::max(it->second, t.order);
    }
    Poly den{Rational(1)};
    for (const auto& [x, m] : max_order) {
        const Poly lin = Poly::linear(Rational(1), x);
        for (int i = 0; i < m; ++i) den *= lin;
    }
    Poly num = poly_ * den;
    for (const auto& t : poles_) {
        Poly factor{Rational(t.coeff)};
        for (const auto& [x, m] : max_order) {
            const Poly lin = Poly::linear(Rational(1), x);
            const int e = (x == t.x) ? m - t.order : m;
            for (int i = 0; i < e; ++i) factor *= lin;
        }
        num += factor;
    }
    return {num, den};
}

std::string PoleSum::str(const std::string& var) const {
    std::ostringstream out;
    bool wrote = false;
    if (!poly_.is_zero()) {
        out << poly_.str(var);
        wrote = true;
    }
    for (const auto& t : poles_) {
        if (wrote) out << (t.coeff.sign() > 0 ? " + " : " - ");
        else if (t.coeff.sign() < 0) out << "-";
        wrote = true;
        out << "(" << t.coeff.abs().str() << ")/(1";
        out << (t.x.sign() > 0 ? " + " : " - ") << t.x.abs().str() << "*" << var << ")";
        if (t.order > 1) out << "^" << t.order;
    }
    if (!wrote) return "0";
    return out.str();
}

}  // namespace kym
