#include "kym/sturm.hpp"

namespace kym {

namespace {

std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain;
    chain.push_back(p);
    Poly d = p.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d);
    while (true) {
        Poly r = chain[chain.size() - 2].divmod(chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

int sign_variations(const std::vector<Poly>& chain, const Rational& t) {
    int variations = 0;
    int prev = 0;
    for (const auto& q : chain) {
        const int s = q.evaluate(t).sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

// Distinct roots of a squarefree sf in (a, b]; sf may vanish at a or b.
int count_half_open(const Poly& sf, const Rational& a, const Rational& b) {
    const int extra = sf.evaluate(b).is_zero() ? 1 : 0;
    Poly q = sf;
    if (q.evaluate(a).is_zero()) q = q.divide_exact(Poly::linear(-a, Rational(1)));
    if (extra) q = q.divide_exact(Poly::linear(-b, Rational(1)));
    if (q.degree() < 1) return extra;
    const auto chain = sturm_chain(q);
    return sign_variations(chain, a) - sign_variations(chain, b) + extra;
}

void isolate(const Poly& sf, const Rational& a, const Rational& b,
             std::vector<std::pair<Rational, Rational>>& out) {
    const int n = count_half_open(sf, a, b);
    if (n == 0) return;
    if (n == 1) {
        out.emplace_back(a, b);
        return;
    }
    const Rational mid = (a + b) / Rational(2);
    isolate(sf, a, mid, out);
    isolate(sf, mid, b, out);
}

}  // namespace

RootIsolation sturm_root_count(const Poly& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) throw ZeroPolynomial{};
    if (!(lo < hi)) throw std::invalid_argument("sturm_root_count: requires lo < hi");
    RootIsolation result;
    result.polynomial = p;
    result.lo = lo;
    result.hi = hi;
    result.root_at_lo = p.evaluate(lo).is_zero();
    if (p.degree() < 1) return result;
    const Poly sf = p.squarefree_part();
    result.root_count = count_half_open(sf, lo, hi);
    isolate(sf, lo, hi, result.isolating_intervals);
    return result;
}

int sturm_count_open(const Poly& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) throw ZeroPolynomial{};
    if (!(lo < hi)) throw std::invalid_argument("sturm_count_open: requires lo < hi");
    if (p.degree() < 1) return 0;
    const Poly sf = p.squarefree_part();
    return count_half_open(sf, lo, hi) - (sf.evaluate(hi).is_zero() ? 1 : 0);
}

}  // namespace kym
