#include "doctest.h"

#include "wbm/bessel.hpp"
#include "wbm/euler.hpp"

using namespace wbm;

TEST_CASE("inert factor collapses pairwise") {
    // eta = -1: (1 - a u)(1 + a u) = 1 - a^2 u^2 per parameter
    EulerInput in{2, -1};
    VarTablePtr t = euler_table(2);
    LaurentPoly one = LaurentPoly::constant(t, 1);
    LaurentPoly u2 = LaurentPoly::variable(t, "u").pow(2);
    LaurentPoly den = (one - LaurentPoly::variable(t, "a1").pow(2) * u2) *
                      (one - LaurentPoly::variable(t, "a2").pow(2) * u2);
    CHECK(l_factor_product(in) == RationalFn(one, den));
}

TEST_CASE("split factor is the square of the standard one") {
    for (int n = 1; n <= 3; ++n) {
        VarTablePtr t = euler_table(n);
        LaurentPoly one = LaurentPoly::constant(t, 1);
        LaurentPoly std_den = one;
        for (int i = 1; i <= n; ++i)
            std_den *= one - LaurentPoly::variable(t, "a" + std::to_string(i)) *
                                 LaurentPoly::variable(t, "u");
        RationalFn standard(one, std_den);
        CHECK(l_factor_product({n, 1}) == standard * standard);
    }
}

TEST_CASE("identity value at rank 1") {
    VarTablePtr t = euler_table(1);
    LaurentPoly one = LaurentPoly::constant(t, 1);
    LaurentPoly au = LaurentPoly::variable(t, "a1") * LaurentPoly::variable(t, "u");
    CHECK(h_identity_value({1, 1}) == RationalFn(one + au, one - au));
    CHECK(h_identity_value({1, -1}) == RationalFn::one(t));
}

TEST_CASE("identity value agrees with the substituted normalizing factor") {
    // The value at the identity is the reciprocal of the normalizing factor
    // after folding the shift into the parameters (a_i -> a_i u / v) and
    // setting b = 1 in the split case.
    for (int n = 1; n <= 2; ++n) {
        VarTablePtr te = euler_table(n);
        LaurentPoly uv = LaurentPoly::variable(te, "u") * LaurentPoly::variable(te, "v", -1);
        for (int eta : {1, -1}) {
            Torus kind = eta == 1 ? Torus::split : Torus::nonsplit;
            RationalFn factor = normalizing_factor(n, kind);
            std::map<std::string, RationalFn> dict;
            for (int i = 1; i <= n; ++i)
                dict.emplace("a" + std::to_string(i),
                             RationalFn(LaurentPoly::variable(te, "a" + std::to_string(i)) * uv));
            if (kind == Torus::split)
                dict.emplace("b", RationalFn::one(te));
            RationalFn substituted = substitute(factor, dict, te);
            CHECK(h_identity_value({n, eta}) == substituted.inverse());
        }
    }
}

TEST_CASE("local identity") {
    for (int n = 1; n <= 3; ++n)
        for (int eta : {1, -1})
            CHECK(verify_euler_identity({n, eta}));
    CHECK_THROWS_AS((void)l_factor_product({1, 2}), UsageError);
}
