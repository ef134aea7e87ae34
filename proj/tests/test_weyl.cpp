#include "doctest.h"

#include <random>
#include <set>

#include "wbm/bessel.hpp"
#include "wbm/gsp4.hpp"
#include "wbm/weyl.hpp"

using namespace wbm;

namespace {

std::mt19937_64 rng(777);

LaurentPoly rand_alpha_poly(const VarTablePtr& t) {
    LaurentPoly p = LaurentPoly::zero(t);
    int terms = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < terms; ++i) {
        Exponents e(t->size());
        for (auto& x : e)
            x = static_cast<int>(rng() % 5) - 2;
        long c = static_cast<long>(rng() % 5) + 1;
        p.add_term(e, Rational(c));
    }
    return p;
}

} // namespace

TEST_CASE("group enumeration") {
    CHECK_THROWS_AS((void)hyperoctahedral(0), UsageError);

    const auto& g1 = hyperoctahedral(1);
    REQUIRE(g1.size() == 2);
    CHECK(g1[0].length == 0);
    CHECK(g1[1].length == 1);

    CHECK(hyperoctahedral(2).size() == 8);

    const auto& g3 = hyperoctahedral(3);
    CHECK(g3.size() == 48);
    int sign_sum = 0;
    for (const auto& w : g3)
        sign_sum += w.sgn();
    CHECK(sign_sum == 0);

    // distinct elements, lengths consistent with sign parity
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    for (const auto& w : g3)
        seen.insert({w.perm, w.sign});
    CHECK(seen.size() == 48);
}

TEST_CASE("length changes by one across a generator") {
    const int n = 3;
    std::vector<SignedPerm> gens;
    for (int i = 0; i + 1 < n; ++i) {
        SignedPerm s = identity_perm(n);
        std::swap(s.perm[i], s.perm[i + 1]);
        s.length = coxeter_length(s.perm, s.sign);
        gens.push_back(s);
    }
    SignedPerm flip = identity_perm(n);
    flip.sign[n - 1] = -1;
    flip.length = coxeter_length(flip.perm, flip.sign);
    gens.push_back(flip);
    for (const auto& g : gens)
        CHECK(g.length == 1);
    for (const auto& w : hyperoctahedral(n))
        for (const auto& g : gens) {
            int l = compose(w, g).length;
            CHECK((l == w.length + 1 || l == w.length - 1));
        }
}

TEST_CASE("action on polynomials") {
    VarTablePtr t = bessel_table(2, Torus::nonsplit);
    LaurentPoly a1 = LaurentPoly::variable(t, "a1");

    CHECK(act(identity_perm(2), a1) == a1);

    SignedPerm flip1 = identity_perm(2);
    flip1.sign[0] = -1;
    flip1.length = coxeter_length(flip1.perm, flip1.sign);
    CHECK(act(flip1, a1) == LaurentPoly::variable(t, "a1", -1));

    const auto& group = hyperoctahedral(2);
    for (int trial = 0; trial < 20; ++trial) {
        const auto& w = group[rng() % group.size()];
        LaurentPoly p = rand_alpha_poly(t);
        CHECK(act(w, act(inverse(w), p)) == p);
    }
}

TEST_CASE("alternator") {
    VarTablePtr t1 = bessel_table(1, Torus::nonsplit);
    LaurentPoly a = LaurentPoly::variable(t1, "a1");
    CHECK(alternator(1, a) == a - LaurentPoly::variable(t1, "a1", -1));

    // anything independent of a_n dies
    VarTablePtr t2 = bessel_table(2, Torus::nonsplit);
    LaurentPoly p_no_a2 = LaurentPoly::variable(t2, "a1") +
                          LaurentPoly::variable(t2, "v") * LaurentPoly::variable(t2, "a1", -2);
    CHECK(alternator(2, p_no_a2).is_zero());

    LaurentPoly mono = LaurentPoly::variable(t2, "a1", 2) * LaurentPoly::variable(t2, "a2");
    LaurentPoly alt = alternator(2, mono);
    CHECK(alt.term_count() == 8);
    for (const auto& w : hyperoctahedral(2))
        CHECK(act(w, alt) == Rational(w.sgn()) * alt);

    // sign equivariance on random input
    for (int n = 1; n <= 3; ++n) {
        VarTablePtr t = bessel_table(n, Torus::nonsplit);
        const auto& group = hyperoctahedral(n);
        for (int trial = 0; trial < 8; ++trial) {
            LaurentPoly p = rand_alpha_poly(t);
            const auto& w = group[rng() % group.size()];
            CHECK(alternator(n, act(w, p)) == Rational(w.sgn()) * alternator(n, p));
        }
    }
}

TEST_CASE("symmetrizer lands in invariants") {
    VarTablePtr t = bessel_table(2, Torus::nonsplit);
    for (int trial = 0; trial < 5; ++trial) {
        LaurentPoly p = symmetrize(2, rand_alpha_poly(t));
        CHECK(is_weyl_invariant(2, p));
    }
}

TEST_CASE("weyl denominator") {
    VarTablePtr t1 = bessel_table(1, Torus::nonsplit);
    CHECK(weyl_denominator(1, t1) ==
          LaurentPoly::variable(t1, "a1", -1) - LaurentPoly::variable(t1, "a1"));

    for (int n = 1; n <= 4; ++n) {
        VarTablePtr t = bessel_table(n, Torus::nonsplit);
        // Throws logic_error when the two forms disagree.
        LaurentPoly delta = weyl_denominator(n, t);
        if (n <= 3)
            for (const auto& w : hyperoctahedral(n))
                CHECK(act(w, delta) == Rational(w.sgn()) * delta);
    }
}

TEST_CASE("invariance predicate") {
    VarTablePtr t = bessel_table(1, Torus::nonsplit);
    LaurentPoly a = LaurentPoly::variable(t, "a1");
    CHECK(is_weyl_invariant(1, a + LaurentPoly::variable(t, "a1", -1)));
    CHECK(!is_weyl_invariant(1, a));

    // model values are invariant by construction
    ScaledValue h = h_value(BesselIndex({1, 1}), 2, Torus::nonsplit);
    CHECK(is_weyl_invariant(2, h.poly));
}

TEST_CASE("symplectic character sanity") {
    // A(staircase * dominant monomial) is divisible by the denominator and
    // the quotient is invariant.
    for (int n = 1; n <= 3; ++n) {
        VarTablePtr t = bessel_table(n, Torus::nonsplit);
        for (int trial = 0; trial < 6; ++trial) {
            Exponents lambda(n);
            int prev = static_cast<int>(rng() % 4);
            for (int i = 0; i < n; ++i) {
                lambda[i] = prev;
                prev = prev > 0 ? static_cast<int>(rng() % (prev + 1)) : 0;
            }
            Exponents e(t->size(), 0);
            for (int i = 0; i < n; ++i)
                e[t->index("a" + std::to_string(i + 1))] = lambda[i] + (n - i);
            LaurentPoly alt = alternator(n, LaurentPoly::monomial(t, e));
            auto quot = try_exact_div(alt, weyl_denominator(n, t));
            REQUIRE(quot.has_value());
            CHECK(is_weyl_invariant(n, *quot));
        }
    }
}

TEST_CASE("order-8 parameter group") {
    const auto& g = omega4();
    REQUIRE(g.size() == 8);

    std::multiset<int> lengths;
    std::set<std::array<int, 4>> perms;
    for (const auto& w : g) {
        lengths.insert(w.length);
        perms.insert(w.perm);
    }
    CHECK(perms.size() == 8);
    CHECK(lengths == std::multiset<int>({0, 1, 1, 2, 2, 3, 3, 4}));

    // every element fixes the product a1*a3 (= a2*a4)
    VarTablePtr t = gsp4_table(Torus::nonsplit);
    LaurentPoly prod = LaurentPoly::variable(t, "a1") * LaurentPoly::variable(t, "a3");
    for (const auto& w : g)
        CHECK(act_omega4(w, prod) == prod);

    // closure: the permutation composite of any two elements is in the set
    for (const auto& w : g)
        for (const auto& u : g) {
            std::array<int, 4> comp;
            for (int i = 0; i < 4; ++i)
                comp[i] = w.perm[u.perm[i]];
            CHECK(perms.count(comp) == 1);
        }
}

TEST_CASE("alternator over the parameter group") {
    VarTablePtr t = gsp4_table(Torus::nonsplit);
    // a3^2 a4^(-1) = a1^(-1) a2 a3 after elimination
    Exponents e(t->size(), 0);
    e[t->index("a1")] = -1;
    e[t->index("a2")] = 1;
    e[t->index("a3")] = 1;
    LaurentPoly denom_arg = LaurentPoly::monomial(t, e);
    LaurentPoly alt = alternator_omega4(denom_arg);
    CHECK(alt.term_count() == 8);

    CHECK(alternator_omega4(LaurentPoly::constant(t, 1)).is_zero());

    // any length-1 element negates an alternant
    for (const auto& w : omega4()) {
        if (w.length != 1)
            continue;
        for (int trial = 0; trial < 5; ++trial) {
            Exponents re(t->size(), 0);
            re[t->index("a1")] = static_cast<int>(rng() % 5) - 2;
            re[t->index("a2")] = static_cast<int>(rng() % 5) - 2;
            re[t->index("a3")] = static_cast<int>(rng() % 5) - 2;
            LaurentPoly p = LaurentPoly::monomial(t, re);
            CHECK(act_omega4(w, alternator_omega4(p)) == -alternator_omega4(p));
        }
    }
}
