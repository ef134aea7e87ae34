#include "doctest.h"

#include "wbm/numeric.hpp"
#include "wbm/waldspurger.hpp"

using namespace wbm;

namespace {

LaurentPoly var(const char* name, int p = 1) {
    return LaurentPoly::variable(gl2_table(), name, p);
}
LaurentPoly one() { return LaurentPoly::constant(gl2_table(), 1); }

RationalFn swap_parameters(const LaurentPoly& p) {
    std::map<std::string, RationalFn> swap = {
        {"g1", RationalFn(var("g2"))},
        {"g2", RationalFn(var("g1"))},
    };
    return substitute(p, swap, gl2_table());
}

} // namespace

TEST_CASE("normalized value at the identity coset") {
    ScaledValue w0 = waldspurger_value(0);
    CHECK(w0.poly == one());
    CHECK(w0.scalar.is_one());
}

TEST_CASE("value at k=1, fixed by hand") {
    // v * (g1 + g2 - t v - g1 g2 t^(-1) v) / (1 - v^2)
    ScaledValue w1 = waldspurger_value(1);
    LaurentPoly expect = var("v") * (var("g1") + var("g2") - var("t") * var("v") -
                                     var("g1") * var("g2") * var("t", -1) * var("v"));
    CHECK(w1.poly == expect);
    CHECK(w1.scalar == RationalFn(one(), one() - var("v").pow(2)));
}

TEST_CASE("symmetry under interchanging the torus parameters") {
    for (int k = 0; k <= 6; ++k) {
        ScaledValue w = waldspurger_value(k);
        CHECK(swap_parameters(w.poly) == RationalFn(w.poly));
    }
}

TEST_CASE("normalizing factor") {
    RationalFn f = waldspurger_normalizer();

    // at g1 = g2 = t = 1 the factor is (1-v)^2/(1-v^2) = (1-v)/(1+v)
    VarTablePtr t = gl2_table();
    std::map<std::string, RationalFn> ones = {
        {"g1", RationalFn::one(t)}, {"g2", RationalFn::one(t)}, {"t", RationalFn::one(t)}};
    CHECK(substitute(f, ones, t) == RationalFn(one() - var("v"), one() + var("v")));

    // the numerator vanishes on the locus g1 t^(-1) v = 1
    std::map<std::string, RationalFn> excluded = {{"t", RationalFn(var("g1") * var("v"))}};
    CHECK(substitute(RationalFn(f.num()), excluded, t).is_zero());
}

TEST_CASE("whittaker values") {
    CHECK(whittaker_value(-1).is_zero());
    CHECK(whittaker_value(0) == one() - var("g1") * var("g2", -1) * var("v").pow(2));
    CHECK(whittaker_normalized(0) == one());

    // k = 2: v^2 (1 - g1 g2^(-1) v^2)(g1^2 + g1 g2 + g2^2)
    LaurentPoly expect = var("v").pow(2) * (one() - var("g1") * var("g2", -1) * var("v").pow(2)) *
                         (var("g1").pow(2) + var("g1") * var("g2") + var("g2").pow(2));
    CHECK(whittaker_value(2) == expect);

    for (int k = 0; k <= 6; ++k)
        CHECK(swap_parameters(whittaker_normalized(k)) == RationalFn(whittaker_normalized(k)));
}

TEST_CASE("macdonald rank-1 value") {
    VarTablePtr t = gl2_table();
    ScaledValue m0 = macdonald_spherical(0, t, "g1");
    CHECK(m0.poly == one());
    CHECK(m0.scalar.is_one());

    ScaledValue m1 = macdonald_spherical(1, t, "g1");
    CHECK(m1.poly == var("v") * (var("g1") + var("g1", -1)));
    CHECK(m1.scalar == RationalFn(one(), one() + var("v").pow(2)));

    std::map<std::string, RationalFn> invert = {{"g1", RationalFn(var("g1", -1))}};
    for (int k = 0; k <= 6; ++k) {
        ScaledValue m = macdonald_spherical(k, t, "g1");
        CHECK(substitute(m.poly, invert, t) == RationalFn(m.poly));
    }
}

TEST_CASE("convergence region") {
    auto pt = [](Rational g1, Rational g2, Rational t) {
        return SatakeNumeric::make(9, {{"g1", g1}, {"g2", g2}, {"t", t}});
    };
    CHECK(region_gl2(pt(1, 1, 1)));
    CHECK(!region_gl2(pt(4, 1, 1)));
    // boundary is excluded: |g1/t| = 3 = q^(1/2)
    CHECK(!region_gl2(pt(3, 1, 1)));
    CHECK(!region_gl2(pt(1, Rational(1, 3), 1)));
}

TEST_CASE("integral oracle") {
    SatakeNumeric pt = SatakeNumeric::make(9, {{"g1", 2}, {"g2", Rational(1, 2)}, {"t", 1}});

    // k = 0: the raw integral times the normalizing factor is exactly 1
    Rational raw0 = waldspurger_integral_oracle(0, pt);
    CHECK(raw0 * eval_at(waldspurger_normalizer(), pt) == 1);

    for (int k = 1; k <= 4; ++k) {
        Rational raw = waldspurger_integral_oracle(k, pt);
        CHECK(raw * eval_at(waldspurger_normalizer(), pt) == eval_at(waldspurger_value(k), pt));
    }

    SatakeNumeric outside = SatakeNumeric::make(9, {{"g1", 4}, {"g2", 1}, {"t", 1}});
    CHECK_THROWS_AS((void)waldspurger_integral_oracle(0, outside), RegionError);

    CHECK_THROWS_AS(SatakeNumeric::make(3, {{"g1", 1}}), UsageError); // not a square
}

TEST_CASE("casselman basis recursion") {
    CHECK(casselman_recursion_check(5));
}
