#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "madlat/certified.hpp"
#include "test_util.hpp"

using namespace madlat;
using testutil::golden_ratio;
using testutil::SplitMix64;

TEST_CASE("rational parsing") {
    CHECK(rat_parse("1/3") == Rat(1, 3));
    CHECK(rat_parse("-7/21") == Rat(-1, 3));
    CHECK(rat_parse("5") == Rat(5));
    CHECK(rat_from_decimal("-0.625") == Rat(-5, 8));
    CHECK(rat_from_decimal("12.5") == Rat(25, 2));
    CHECK_THROWS_AS(rat_parse("x/3"), ParseError);
    CHECK_THROWS_AS(rat_parse("1/0"), ParseError);
}

TEST_CASE("quadratic normalization and exact compares") {
    Quad phi(1, 1, 2, 5);
    CHECK(phi.is_irrational());
    CHECK(phi.sign() == 1);
    CHECK(phi.floor_exact() == 1);

    // sqrt(8) normalizes to 2 sqrt(2)
    Quad r8(0, 1, 1, 8);
    Quad r2twice(0, 2, 1, 2);
    CHECK(r8.identical(r2twice));

    // perfect squares collapse to rationals
    Quad r9(0, 1, 3, 9);
    CHECK(r9.as_rational().has_value());
    CHECK(*r9.as_rational() == Rat(1));

    // (1+sqrt5)/2 * (1-sqrt5)/2 = -1 exactly
    Quad conj(1, -1, 2, 5);
    Quad prod = mul_same(phi, conj);
    CHECK(prod.as_rational().has_value());
    CHECK(*prod.as_rational() == Rat(-1));

    // phi^2 = phi + 1
    Quad phi2 = mul_same(phi, phi);
    Quad phip1 = phi + Rat(1);
    CHECK(phi2.cmp_same(phip1) == 0);

    CHECK(phi.cmp_with_rat(Rat(8, 5)) > 0);
    CHECK(phi.cmp_with_rat(Rat(13, 8)) < 0);
}

TEST_CASE("quad floor across signs") {
    Quad neg_phi(-1, -1, 2, 5);  // -1.618...
    CHECK(neg_phi.floor_exact() == -2);
    Quad small(0, 1, 10, 2);  // sqrt(2)/10 = 0.1414
    CHECK(small.floor_exact() == 0);
    Quad negsmall(0, -1, 10, 2);
    CHECK(negsmall.floor_exact() == -1);
}

TEST_CASE("certified arithmetic stays exact in a common field") {
    CertifiedReal phi = golden_ratio();
    CertifiedReal x = phi * phi - phi;  // = 1
    CHECK(x.rat() != nullptr);
    CHECK(*x.rat() == Rat(1));

    CertifiedReal s = sqrt(CertifiedReal(Rat(2)));
    CHECK(s.quad() != nullptr);
    CHECK(CertifiedReal::compare(s * s, CertifiedReal(2L)) == 0);

    // mixed surds leave the field and fall back to certified intervals
    CertifiedReal mixed = s * phi;
    CHECK(!mixed.is_exact());
    CHECK(mixed.approx(128).width() < 1e-30);
}

TEST_CASE("certified comparison refines until provable") {
    CertifiedReal a = exp(CertifiedReal(1L));
    CertifiedReal b = exp(CertifiedReal(Rat(1)) + CertifiedReal(Rat(1, Int("100000000000000000000"))));
    CHECK(CertifiedReal::compare(a, b) < 0);

    // equal exact values across representations
    CHECK(CertifiedReal::compare(CertifiedReal(Rat(1, 3)), CertifiedReal(Quad(1, 0, 3, 7))) == 0);
}

TEST_CASE("dist_to_Z basics") {
    CHECK(*dist_to_Z(CertifiedReal(Rat(1, 2))).rat() == Rat(1, 2));  // midpoint
    CHECK(dist_to_Z(CertifiedReal(3L)).is_zero());                   // integer
    CHECK(*dist_to_Z(CertifiedReal(Rat(-7, 3))).rat() == Rat(1, 3));

    // 5 phi = (5 + 5 sqrt5)/2 ~ 8.0901699; distance |5 phi - 8|
    CertifiedReal d = dist_to_Z(golden_ratio() * CertifiedReal(5L));
    CHECK(d.quad() != nullptr);
    CHECK(d.mid() == doctest::Approx(0.09016994).epsilon(1e-7));
    // against the exact closed form (-11 + 5 sqrt5)/2 derived by hand
    CHECK(CertifiedReal::compare(d, CertifiedReal(Quad(-11, 5, 2, 5))) == 0);
}

TEST_CASE("dist_to_Z on lazy values near half-integers") {
    // log(e^{5/2}) = 5/2: lazy representation of an exact half-integer
    CertifiedReal x = log(exp(CertifiedReal(Rat(5, 2))));
    CertifiedReal d = dist_to_Z(x);
    CHECK(d.mid() == doctest::Approx(0.5).epsilon(1e-12));
    CertifiedReal y = log(exp(CertifiedReal(Rat(51, 25))));
    CHECK(dist_to_Z(y).mid() == doctest::Approx(0.04).epsilon(1e-9));
}

TEST_CASE("dist invariance properties on random certified reals") {
    SplitMix64 rng(20240817);
    for (int trial = 0; trial < 200; ++trial) {
        CertifiedReal x;
        switch (rng.below(3)) {
            case 0: x = CertifiedReal(testutil::random_rat(rng, 40, 12)); break;
            case 1:
                x = CertifiedReal(Quad(rng.range(-9, 9), rng.range(1, 9), rng.range(1, 9),
                                       rng.range(2, 30)));
                break;
            default:
                x = log(exp(CertifiedReal(testutil::random_rat(rng, 20, 7))));
                break;
        }
        long k = rng.range(-25, 25);
        CertifiedReal d0 = dist_to_Z(x);
        CertifiedReal d1 = dist_to_Z(x + CertifiedReal(k));
        CertifiedReal d2 = dist_to_Z(-x);
        CHECK(std::abs(d0.mid() - d1.mid()) < 1e-15);
        CHECK(std::abs(d0.mid() - d2.mid()) < 1e-15);
        CHECK(d0.approx(128).lo_double() >= -1e-30);
        CHECK(d0.approx(128).hi_double() <= 0.5 + 1e-30);
    }
}

TEST_CASE("floor_certified") {
    CHECK(floor_certified(CertifiedReal(Rat(7, 2))) == 3);
    CHECK(floor_certified(CertifiedReal(Rat(-7, 2))) == -4);
    CHECK(floor_certified(golden_ratio()) == 1);
    CHECK(floor_certified(exp(CertifiedReal(1L))) == 2);
    CHECK(nearest_certified(exp(CertifiedReal(1L))) == 3);
}

TEST_CASE("precision cap surfaces as PrecisionExhausted") {
    set_precision_cap(256);
    // two distinct lazy encodings of the same number can never be separated
    CertifiedReal a = exp(CertifiedReal(Rat(2)));
    CertifiedReal b = exp(CertifiedReal(Rat(1))) * exp(CertifiedReal(Rat(1)));
    CHECK_THROWS_AS((void)CertifiedReal::compare(a, b), PrecisionExhausted);
    set_precision_cap(16384);
}
