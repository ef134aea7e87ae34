#include "wbm/waldspurger.hpp"

namespace wbm {

VarTablePtr gl2_table() {
    static VarTablePtr t = VarTable::make({"v", "g1", "g2", "t"});
    return t;
}

namespace {

struct Gl2Symbols {
    VarTablePtr t;
    LaurentPoly one, v, g1, g2, tau;
    Gl2Symbols()
        : t(gl2_table()),
          one(LaurentPoly::constant(t, 1)),
          v(LaurentPoly::variable(t, "v")),
          g1(LaurentPoly::variable(t, "g1")),
          g2(LaurentPoly::variable(t, "g2")),
          tau(LaurentPoly::variable(t, "t")) {}
};

const Gl2Symbols& sym() {
    static Gl2Symbols s;
    return s;
}

} // namespace

ScaledValue waldspurger_value(int k) {
    if (k < 0)
        throw UsageError("coset index must be nonnegative");
    const auto& s = sym();
    // Bracket terms over the common denominator (1 - g1^(-1) g2)(1 - g1 g2^(-1)).
    LaurentPoly d1 = s.one - s.g1.pow(-1) * s.g2;
    LaurentPoly d2 = s.one - s.g1 * s.g2.pow(-1);
    LaurentPoly n1 = s.g1.pow(k) * (s.one - s.g2 * s.tau.pow(-1) * s.v) *
                     (s.one - s.g1.pow(-1) * s.tau * s.v) * d2;
    LaurentPoly n2 = s.g2.pow(k) * (s.one - s.g1 * s.tau.pow(-1) * s.v) *
                     (s.one - s.g2.pow(-1) * s.tau * s.v) * d1;
    LaurentPoly quotient = exact_div(n1 + n2, d1 * d2);
    LaurentPoly poly = s.v.pow(k) * quotient;
    RationalFn scalar(s.one, s.one - s.v.pow(2));
    return ScaledValue(std::move(poly), std::move(scalar)).cleared();
}

RationalFn waldspurger_normalizer() {
    const auto& s = sym();
    LaurentPoly num = (s.one - s.g1 * s.tau.pow(-1) * s.v) * (s.one - s.g2.pow(-1) * s.tau * s.v);
    LaurentPoly den = s.one - s.g1 * s.g2.pow(-1) * s.v.pow(2);
    return RationalFn(std::move(num), std::move(den));
}

LaurentPoly whittaker_normalized(int k) {
    const auto& s = sym();
    if (k < 0)
        return LaurentPoly::zero(s.t);
    // (g1^(k+1) - g2^(k+1)) / (g1 - g2) is the complete homogeneous sum.
    LaurentPoly geom = exact_div(s.g1.pow(k + 1) - s.g2.pow(k + 1), s.g1 - s.g2);
    return s.v.pow(k) * geom;
}

LaurentPoly whittaker_value(int k) {
    const auto& s = sym();
    if (k < 0)
        return LaurentPoly::zero(s.t);
    return (s.one - s.g1 * s.g2.pow(-1) * s.v.pow(2)) * whittaker_normalized(k);
}

ScaledValue macdonald_spherical(int k, const VarTablePtr& table, const std::string& alpha) {
    if (k < 0)
        throw UsageError("coset index must be nonnegative");
    LaurentPoly one = LaurentPoly::constant(table, 1);
    LaurentPoly v = LaurentPoly::variable(table, "v");
    LaurentPoly y = LaurentPoly::variable(table, alpha);
    LaurentPoly num = (y - y.pow(-1) * v.pow(2)) * y.pow(k) - (y.pow(-1) - y * v.pow(2)) * y.pow(-k);
    LaurentPoly poly = v.pow(k) * exact_div(num, y - y.pow(-1));
    RationalFn scalar(one, one + v.pow(2));
    return ScaledValue(std::move(poly), std::move(scalar)).cleared();
}

bool region_gl2(const SatakeNumeric& pt) {
    const Rational& g1 = pt.at("g1");
    const Rational& g2 = pt.at("g2");
    const Rational& t = pt.at("t");
    return rational_abs(g1 / t) < pt.sqrt_q && rational_abs(t / g2) < pt.sqrt_q;
}

// The integrand depends on a through d = val(a) + k (determinant valuation)
// and m = min(val(a) + k, val(a + 1)); the spherical vector contributes
// g1^(d-m) g2^m q^(-(d-2m)/2) and the character contributes t^(-val(a)).
// Shells:
//   val(a) = -m0 < 0: val(a+1) = -m0, multiplicative measure 1;
//   val(a) =  m0 > 0: val(a+1) = 0, measure 1;
//   val(a) = 0 split by j = val(a+1): measure (1-2/q)/(1-1/q) for j = 0
//   and q^(-j) for j >= 1 (multiplicative measure of -1 + pi^j O^\times).
// Each tail is a geometric series convergent exactly on the region.
Rational waldspurger_integral_oracle(int k, const SatakeNumeric& pt) {
    if (k < 0)
        throw UsageError("coset index must be nonnegative");
    if (!region_gl2(pt))
        throw RegionError("numeric point outside the convergence region");
    const Rational& g1 = pt.at("g1");
    const Rational& g2 = pt.at("g2");
    const Rational& t = pt.at("t");
    const Rational& q = pt.q;
    const Rational& sq = pt.sqrt_q;
    const Rational qinv = 1 / q;

    // val(a) < 0 shells: sum over m >= 1 of (t g2^(-1) q^(-1/2))^m, times g1^k q^(-k/2).
    const Rational base = rational_pow(g1, k) / rational_pow(sq, k);
    const Rational s1 = t / (g2 * sq);
    const Rational sumA = base * s1 / (1 - s1);
    // val(a) > 0 shells: sum over m >= 1 of (g1 t^(-1) q^(-1/2))^m, same prefactor.
    const Rational s2 = g1 / (t * sq);
    const Rational sumB = base * s2 / (1 - s2);

    // Unit shell, j = val(a+1) = 0.
    const Rational m0 = (1 - 2 * qinv) / (1 - qinv);
    Rational total = sumA + sumB + m0 * base;
    // 1 <= j < k: m = j.
    for (int j = 1; j < k; ++j)
        total += rational_pow(q, -j) * rational_pow(g1, k - j) * rational_pow(g2, j) /
                 rational_pow(sq, k - 2 * j);
    // j >= max(k, 1): m = k, value g2^k q^(k/2).
    const int tail_start = std::max(k, 1);
    total += rational_pow(g2, k) * rational_pow(sq, k) * rational_pow(q, -tail_start) / (1 - qinv);
    return total;
}

bool casselman_recursion_check(int kmax) {
    const auto& s = sym();
    const RationalFn one = RationalFn::one(s.t);
    const RationalFn v(s.v);
    const RationalFn g1(s.g1);
    const RationalFn g2(s.g2);
    const RationalFn tau(s.tau);

    // Functional on the long-cell basis vector, summed explicitly.
    const RationalFn w_long = (one - v * tau * g2.inverse()).inverse();
    // Intertwining coefficient attached to the long element.
    const RationalFn c_long =
        (one - v * v * g1 * g2.inverse()) / (one - g1 * g2.inverse());

    // Raw coset values from the normalized ones.
    const RationalFn norm(waldspurger_normalizer());
    auto raw = [&](int k) { return waldspurger_value(k).as_rational() / norm; };

    // Pin the functional on the identity-cell basis vector from k = 0,
    // where the averaged vector is the spherical vector itself.
    const RationalFn w_id = raw(0) - c_long * w_long;

    auto averaged = [&](int k) {
        RationalFn vk = v;
        RationalFn mono1 = one, mono2 = one;
        for (int i = 0; i < k; ++i) {
            mono1 *= v * g1;
            mono2 *= v * g2;
        }
        return w_id * mono1 + w_long * c_long * mono2;
    };

    const RationalFn lhs_factor = one - v * v;
    for (int k = 1; k <= kmax; ++k) {
        RationalFn lhs = lhs_factor * raw(k);
        RationalFn rhs = averaged(k) - v * v * tau * averaged(k - 1);
        if (lhs != rhs)
            return false;
    }
    return true;
}

} // namespace wbm
