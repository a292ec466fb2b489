#pragma once

#include <random>
#include <vector>

#include "kym/polesum.hpp"

namespace kymtest {

using kym::Poly;
using kym::PoleSum;
using kym::Rational;

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x6b796d5eed);  // fixed seed: deterministic tests
    return gen;
}

inline long random_long(long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    return dist(rng());
}

inline Rational random_rational(long num_abs, long den_max) {
    const long den = random_long(1, den_max);
    return Rational(random_long(-num_abs, num_abs), den);
}

/// Nonzero rational with |x| < 1 and a small denominator.
inline Rational random_pole_parameter() {
    while (true) {
        const long den = random_long(2, 12);
        const long num = random_long(-(den - 1), den - 1);
        if (num != 0) return Rational(num, den);
    }
}

inline Rational random_in_open_interval() {
    // in (-1, 1), used as an evaluation point away from the poles' range
    const long den = random_long(3, 50);
    return Rational(random_long(-(den - 1), den - 1), den);
}

inline Poly random_poly(int max_degree, long coeff_abs = 6) {
    const int deg = static_cast<int>(random_long(0, max_degree));
    std::vector<Rational> cs;
    for (int i = 0; i <= deg; ++i) cs.push_back(random_rational(coeff_abs, 4));
    return Poly(std::move(cs));
}

inline PoleSum random_polesum(int max_poly_degree = 3, int max_terms = 3, int max_order = 3) {
    PoleSum f{random_poly(max_poly_degree)};
    const int terms = static_cast<int>(random_long(0, max_terms));
    for (int i = 0; i < terms; ++i) {
        f += PoleSum::pole(random_pole_parameter(),
                           static_cast<int>(random_long(1, max_order)),
                           random_rational(6, 4));
    }
    return f;
}

}  // namespace kymtest
