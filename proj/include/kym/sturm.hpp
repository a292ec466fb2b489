#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "kym/poly.hpp"

namespace kym {

class ZeroPolynomial : public std::invalid_argument {
public:
    ZeroPolynomial() : std::invalid_argument("Sturm count of the zero polynomial") {}
};

/// Certified real-root count of `polynomial` over the half-open interval
/// (lo, hi] — the natural interval for Sturm's theorem — together with
/// isolating intervals, each of the form (a, b] containing exactly one
/// distinct root. Roots are counted without multiplicity. `root_at_lo`
/// is the separate exact test at the excluded left endpoint.
struct RootIsolation {
    Poly polynomial;
    Rational lo, hi;
    int root_count = 0;
    bool root_at_lo = false;
    std::vector<std::pair<Rational, Rational>> isolating_intervals;
};

/// Exact count of distinct real roots of p in (lo, hi] by Sturm chains,
/// with isolating intervals refined by bisection. Requires p nonzero and
/// lo < hi; throws ZeroPolynomial / std::invalid_argument.
RootIsolation sturm_root_count(const Poly& p, const Rational& lo, const Rational& hi);

/// Distinct real roots of p in the open interval (lo, hi).
int sturm_count_open(const Poly& p, const Rational& lo, const Rational& hi);

}  // namespace kym
