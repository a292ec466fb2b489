#include <doctest.h>

#include "kym/poly.hpp"
#include "kym/rational.hpp"
#include "kym/sturm.hpp"
#include "support.hpp"

using namespace kym;
using kymtest::random_long;
using kymtest::random_poly;
using kymtest::random_rational;

TEST_SUITE("rational") {

TEST_CASE("canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(3, -6).num() == -1);
    CHECK(Rational(3, -6).den() == 2);
    CHECK(Rational(0, 7).str() == "0");
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("arithmetic is exact") {
    const Rational a(1, 3), b(2, 5);
    CHECK(a + b == Rational(11, 15));
    CHECK(a - b == Rational(-1, 15));
    CHECK(a * b == Rational(2, 15));
    CHECK(a / b == Rational(5, 6));
    CHECK(Rational(7, 3).pow(-2) == Rational(9, 49));
    CHECK_THROWS_AS(Rational(0).reciprocal(), std::domain_error);
}

TEST_CASE("parse") {
    CHECK(Rational::parse("3/6") == Rational(1, 2));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational::parse("+2/4") == Rational(1, 2));
    CHECK(Rational::parse("+2/-4").has_value() == false);  // one sign, leading only
    CHECK(Rational::parse("2/0").has_value() == false);
    CHECK(Rational::parse("") .has_value() == false);
    CHECK(Rational::parse("a/b").has_value() == false);
    CHECK(Rational::parse(" 2").has_value() == false);
    CHECK(Rational::parse("0x10").has_value() == false);
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
}

TEST_CASE("ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(5, 10) <= Rational(1, 2));
}

}

TEST_SUITE("poly") {

TEST_CASE("degree and leading invariant") {
    const Poly p{Rational(1), Rational(0), Rational(3)};
    CHECK(p.degree() == 2);
    CHECK(p.leading() == Rational(3));
    CHECK(Poly{}.degree() == -1);
    CHECK((Poly{Rational(1)} - Poly{Rational(1)}).is_zero());
}

TEST_CASE("product degree adds") {
    for (int i = 0; i < 20; ++i) {
        Poly a = random_poly(4), b = random_poly(4);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK((a * b).degree() == a.degree() + b.degree());
    }
}

TEST_CASE("divmod identity") {
    for (int i = 0; i < 30; ++i) {
        const Poly a = random_poly(6);
        Poly d = random_poly(3);
        if (d.is_zero()) d = Poly{Rational(1), Rational(1)};
        const auto [q, r] = a.divmod(d);
        CHECK(q * d + r == a);
        CHECK(r.degree() < d.degree());
    }
}

TEST_CASE("gcd and squarefree part") {
    const Poly zm1 = Poly::linear(Rational(-1), Rational(1));  // z - 1
    const Poly zp2 = Poly::linear(Rational(2), Rational(1));   // z + 2
    const Poly z = Poly::linear(Rational(0), Rational(1));
    CHECK(Poly::gcd(zm1 * zp2, zm1 * z) == zm1);
    const Poly p = zm1 * zm1 * zp2;
    const Poly sf = p.squarefree_part();
    CHECK(sf == zm1 * zp2.scaled(Rational(1)));
}

TEST_CASE("compose_affine") {
    const Poly p{Rational(1), Rational(2), Rational(1)};  // (1+z)^2
    const Poly q = p.compose_affine(Rational(2), Rational(-1));  // (2z)^2
    CHECK(q == Poly{Rational(0), Rational(0), Rational(4)});
    for (int i = 0; i < 10; ++i) {
        const Poly r = random_poly(5);
        const Rational s = random_rational(5, 3), t = random_rational(5, 3);
        const Rational z0 = random_rational(4, 5);
        CHECK(r.compose_affine(s, t).evaluate(z0) == r.evaluate(s * z0 + t));
    }
}

}

TEST_SUITE("sturm") {

TEST_CASE("half-open convention, documented endpoints") {
    // 1 - z^2 has roots exactly at -1 and +1: the half-open count over
    // (-1, 1] picks up the right endpoint, the open count neither.
    const Poly p{Rational(1), Rational(0), Rational(-1)};
    const RootIsolation iso = sturm_root_count(p, Rational(-1), Rational(1));
    CHECK(iso.root_count == 1);
    CHECK(iso.root_at_lo);
    CHECK(sturm_count_open(p, Rational(-1), Rational(1)) == 0);
}

TEST_CASE("single root") {
    const Poly z = Poly::linear(Rational(0), Rational(1));
    const RootIsolation iso = sturm_root_count(z, Rational(-1), Rational(1));
    CHECK(iso.root_count == 1);
    CHECK(!iso.root_at_lo);
    REQUIRE(iso.isolating_intervals.size() == 1);
}

TEST_CASE("zero polynomial rejected") {
    CHECK_THROWS_AS(sturm_root_count(Poly{}, Rational(0), Rational(1)), ZeroPolynomial);
    CHECK_THROWS_AS(sturm_root_count(Poly{Rational(1)}, Rational(1), Rational(0)),
                    std::invalid_argument);
}

TEST_CASE("isolating intervals each hold one sign change") {
    // roots at -1/4, 1/4, 1/2
    const Poly p = Poly::linear(Rational(1, 4), Rational(1)) *
                   Poly::linear(Rational(-1, 4), Rational(1)) *
                   Poly::linear(Rational(-1, 2), Rational(1));
    const RootIsolation iso = sturm_root_count(p, Rational(-1), Rational(1));
    CHECK(iso.root_count == 3);
    REQUIRE(iso.isolating_intervals.size() == 3);
    for (const auto& [a, b] : iso.isolating_intervals) {
        const int sa = p.evaluate(a).sign();
        const int sb = p.evaluate(b).sign();
        // one simple root inside (a, b]: either a sign change or a root at b
        CHECK((sa * sb < 0 || sb == 0));
    }
}

TEST_CASE("multiple roots counted once") {
    const Poly zm = Poly::linear(Rational(-1, 3), Rational(1));
    const Poly p = zm * zm * zm;  // triple root at 1/3
    CHECK(sturm_root_count(p, Rational(-1), Rational(1)).root_count == 1);
}

TEST_CASE("count is additive over root-disjoint products") {
    for (int trial = 0; trial < 25; ++trial) {
        // build p and q from distinct rational roots
        std::vector<Rational> roots;
        Poly p{Rational(1)}, q{Rational(1)};
        auto fresh_root = [&roots]() {
            while (true) {
                const Rational r = Rational(random_long(-20, 20), 16);
                bool dup = false;
                for (const auto& s : roots) dup = dup || s == r;
                if (!dup) {
                    roots.push_back(r);
                    return r;
                }
            }
        };
        const int np = static_cast<int>(random_long(0, 3));
        const int nq = static_cast<int>(random_long(0, 3));
        for (int i = 0; i < np; ++i) p *= Poly::linear(-fresh_root(), Rational(1));
        for (int i = 0; i < nq; ++i) q *= Poly::linear(-fresh_root(), Rational(1));
        const Rational lo(-1), hi(1);
        const int cp = sturm_root_count(p, lo, hi).root_count;
        const int cq = sturm_root_count(q, lo, hi).root_count;
        const int cpq = sturm_root_count(p * q, lo, hi).root_count;
        CHECK(cpq == cp + cq);
    }
}

}
