#include "dstrat/curves.hpp"

#include <doctest.h>

#include "oracles.hpp"

#include <cmath>
#include <random>

using namespace dstrat;

namespace {

BivarPoly P(const char* s) { return parse_bivar_poly(s); }

}  // namespace

TEST_CASE("inversion numerators") {
    auto r = inv_transform(P("x^2 + y^2 - 1"));
    CHECK(r.poly == P("1 - x^2 - y^2"));
    CHECK(r.tau == 1);
    r = inv_transform(P("x"));
    CHECK(r.poly == P("x"));
    CHECK(r.tau == 1);
    r = inv_transform(P("x - 1"));
    CHECK(r.poly == P("x - x^2 - y^2"));
    CHECK(r.tau == 1);
    r = inv_transform(P("5"));
    CHECK(r.poly == P("5"));
    CHECK(r.tau == 0);
    CHECK_THROWS_AS(inv_transform(BivarPoly()), std::invalid_argument);
}

TEST_CASE("inversion is an involution up to scale") {
    std::mt19937 rng(11);
    for (int k = 0; k < 40; ++k) {
        const BivarPoly f = oracle::random_poly(rng, 3);
        if (f.is_zero() || f.divide_by_rho()) continue;
        const BivarPoly back = inv_transform(inv_transform(f).poly).poly;
        CHECK(back.is_proportional_to(f));
    }
}

TEST_CASE("invariance scalars") {
    auto r = is_invariant(P("x^2 + y^2 - 1"), CurveTransform::Inv);
    CHECK(r.invariant);
    CHECK(r.scale == -1);
    r = is_invariant(P("y"), CurveTransform::Conj);
    CHECK(r.invariant);
    CHECK(r.scale == -1);
    CHECK_FALSE(is_invariant(P("x*y + 1"), CurveTransform::Conj).invariant);
    CHECK(is_invariant(P("y"), CurveTransform::InvConj).invariant);
}

TEST_CASE("standard curves") {
    auto c = classify_standard(P("x"));
    CHECK(c.label == StandardCurve::VerticalAxis);
    CHECK(c.separates_zero_and_infinity);
    c = classify_standard(P("-2*y"));
    CHECK(c.label == StandardCurve::RealAxis);
    c = classify_standard(P("3*x^2 + 3*y^2 - 3"));
    CHECK(c.label == StandardCurve::UnitCircle);
    CHECK(c.sign_near_zero == DirectionalSign::Negative);
    CHECK(c.sign_near_infinity == DirectionalSign::Positive);
    CHECK_FALSE(c.irreducibility_checked);

    c = classify_standard(P("x^2 + y^2 - 2"));
    CHECK(c.label == StandardCurve::NonStandard);
    CHECK(c.conj_invariant);
    CHECK_FALSE(c.inv_invariant);
}

TEST_CASE("invariance flags agree with the point-sampling oracle") {
    std::mt19937 rng(2024);
    for (int k = 0; k < 60; ++k) {
        const BivarPoly f = oracle::random_poly(rng, 2);
        if (f.total_degree() < 1) continue;
        const auto c = classify_standard(f);
        CHECK(c.conj_invariant == oracle::conj_invariant_by_sampling(f, rng));
        CHECK(c.inv_invariant == oracle::inv_invariant_by_sampling(f, rng));
    }
}

TEST_CASE("orbit polynomials") {
    CHECK(orbit_polynomial(P("x^2+y^2-1")).is_proportional_to(P("x^2+y^2-1").pow(4)));
    CHECK(orbit_polynomial(P("x")).is_proportional_to(P("x^4")));
    std::mt19937 rng(5);
    for (int k = 0; k < 30; ++k) {
        const BivarPoly f = oracle::random_poly(rng, 3);
        if (f.is_zero()) continue;
        const BivarPoly F = orbit_polynomial(f);
        const auto ci = is_invariant(F, CurveTransform::Inv);
        const auto cc = is_invariant(F, CurveTransform::Conj);
        CHECK(ci.invariant);
        CHECK(cc.invariant);
        if (ci.invariant) CHECK(ci.scale == 1);
    }
}

TEST_CASE("radial coefficients and palindromes") {
    const auto r = radial_coefficients(P("x^2 + y^2 - 1"), 0.3);
    REQUIRE(r.size() == 3);
    CHECK(r[0] == doctest::Approx(-1));
    CHECK(r[1] == doctest::Approx(0).epsilon(1e-15));
    CHECK(r[2] == doctest::Approx(1));
    CHECK(palindrome_test(r) == PalindromeKind::Antipalindromic);

    const auto z = radial_coefficients(P("x^2 - y^2"), M_PI / 4);
    for (double v : z) CHECK(std::abs(v) < 1e-12);
    CHECK_THROWS_AS(palindrome_test(z), std::invalid_argument);

    CHECK(palindrome_test({1, -3, 1}) == PalindromeKind::Palindromic);
    CHECK(palindrome_test({0, 2, 5, 2, 0}) == PalindromeKind::Palindromic);
    CHECK(palindrome_test({1, 2, 3}) == PalindromeKind::Neither);
}

TEST_CASE("palindromic family follows its defining sum") {
    // The i = n/2 summand carries (1 + rho^0) = 2, so a half coefficient is
    // needed for a single copy of x.
    CHECK(palindromic_family({{{0, 0}, Rational(1)}, {{1, 0}, Rational(-3, 2)}}, 2) == P("x^2 + y^2 - 3*x + 1"));
    CHECK(palindromic_family({{{0, 0}, Rational(1)}, {{1, 0}, Rational(-3)}}, 2) == P("x^2 + y^2 - 6*x + 1"));
    CHECK_THROWS_AS(palindromic_family({{{0, 0}, Rational(1)}}, 3), std::invalid_argument);
    CHECK_THROWS_AS(palindromic_family({{{3, 0}, Rational(1)}}, 4), std::invalid_argument);
    CHECK_THROWS_AS(palindromic_family({{{2, 1}, Rational(1)}}, 4), std::domain_error);

    std::mt19937 rng(99);
    for (int k = 0; k < 30; ++k) {
        const int n = 2 * std::uniform_int_distribution<int>(1, 3)(rng);
        const BivarPoly f = palindromic_family(oracle::random_family_coeffs(rng, n), n);
        for (double phi : {0.1, 1.3, 2.9}) CHECK(palindrome_test(radial_coefficients(f, phi)) == PalindromeKind::Palindromic);
    }
}
