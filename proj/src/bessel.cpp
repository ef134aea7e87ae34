#include "wbm/bessel.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace wbm {

BesselIndex::BesselIndex(std::vector<int> entries) : k(std::move(entries)) {
    if (k.empty())
        throw UsageError("coset index must have at least one entry");
    for (int ki : k)
        if (ki < 0)
            throw UsageError("coset index entries must be nonnegative");
}

std::vector<int> BesselIndex::partial_sums() const {
    std::vector<int> kp(k.size());
    int acc = 0;
    for (std::size_t i = 0; i < k.size(); ++i) {
        acc += k[i];
        kp[i] = acc;
    }
    return kp;
}

int BesselIndex::total() const {
    int acc = 0;
    for (int ki : k)
        acc += ki;
    return acc;
}

VarTablePtr bessel_table(int n, Torus kind) {
    if (n < 1)
        throw UsageError("rank must be at least 1");
    static std::map<std::pair<int, Torus>, VarTablePtr> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, kind);
    auto it = cache.find(key);
    if (it != cache.end())
        return it->second;
    std::vector<std::string> names = {"v"};
    for (int i = 1; i <= n; ++i)
        names.push_back("a" + std::to_string(i));
    if (kind == Torus::split)
        names.push_back("b");
    return cache.emplace(key, VarTable::make(std::move(names))).first->second;
}

int index_v_power(const BesselIndex& k, int n) {
    if (k.rank() != n)
        throw UsageError("coset index rank mismatch");
    int p = 0;
    for (int i = 1; i <= n; ++i)
        p += (n * n - (i - 1) * (i - 1)) * k.k[i - 1];
    return p;
}

namespace {

LaurentPoly var_a(const VarTablePtr& t, int i) {
    return LaurentPoly::variable(t, "a" + std::to_string(i));
}

// Shared staircase monomial prod_i a_{n+1-i}^(-k'_i - i).
LaurentPoly staircase_monomial(const BesselIndex& k, int n, const VarTablePtr& t) {
    const auto kp = k.partial_sums();
    Exponents e(t->size(), 0);
    for (int i = 1; i <= n; ++i)
        e[t->index("a" + std::to_string(n + 1 - i))] = -kp[i - 1] - i;
    return LaurentPoly::monomial(t, std::move(e));
}

ScaledValue h_nonsplit(const BesselIndex& k, int n) {
    VarTablePtr t = bessel_table(n, Torus::nonsplit);
    LaurentPoly one = LaurentPoly::constant(t, 1);
    LaurentPoly v = LaurentPoly::variable(t, "v");
    LaurentPoly arg = staircase_monomial(k, n, t);
    for (int i = 1; i <= n; ++i)
        arg *= one - var_a(t, i).pow(2) * v.pow(2);
    LaurentPoly quotient = exact_div(alternator(n, arg), weyl_denominator(n, t));
    LaurentPoly poly = v.pow(index_v_power(k, n)) * quotient;
    RationalFn scalar(one, one + v.pow(2));
    return ScaledValue(std::move(poly), std::move(scalar)).cleared();
}

ScaledValue h_split(const BesselIndex& k, int n) {
    VarTablePtr t = bessel_table(n, Torus::split);
    LaurentPoly one = LaurentPoly::constant(t, 1);
    LaurentPoly v = LaurentPoly::variable(t, "v");
    LaurentPoly b = LaurentPoly::variable(t, "b");

    LaurentPoly arg = LaurentPoly::constant(t, 1);
    RationalFn scalar = RationalFn::one(t);
    if (k.k[0] == 0) {
        const auto kp = k.partial_sums();
        arg *= var_a(t, n).pow(-1);
        for (int i = 1; i <= n - 1; ++i) {
            arg *= var_a(t, i).pow(-kp[n - i] - n - 1 + i);
            arg *= (one - var_a(t, i) * b * v) * (one - var_a(t, i) * b.pow(-1) * v);
        }
    } else {
        arg = staircase_monomial(k, n, t);
        for (int i = 1; i <= n; ++i)
            arg *= (one - var_a(t, i) * b * v) * (one - var_a(t, i) * b.pow(-1) * v);
        scalar = RationalFn(one, one - v.pow(2));
    }
    LaurentPoly quotient = exact_div(alternator(n, arg), weyl_denominator(n, t));
    LaurentPoly poly = v.pow(index_v_power(k, n)) * quotient;
    return ScaledValue(std::move(poly), std::move(scalar)).cleared();
}

} // namespace

ScaledValue h_value(const BesselIndex& k, int n, Torus kind) {
    if (k.rank() != n)
        throw UsageError("coset index rank mismatch");
    static std::map<std::tuple<int, Torus, std::vector<int>>, ScaledValue> memo;
    static std::mutex mu;
    auto key = std::make_tuple(n, kind, k.k);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(key);
        if (it != memo.end())
            return it->second;
    }
    ScaledValue value = (kind == Torus::nonsplit) ? h_nonsplit(k, n) : h_split(k, n);
    std::lock_guard<std::mutex> lock(mu);
    return memo.emplace(std::move(key), std::move(value)).first->second;
}

RationalFn normalizing_factor(int n, Torus kind) {
    VarTablePtr t = bessel_table(n, kind);
    LaurentPoly one = LaurentPoly::constant(t, 1);
    LaurentPoly v = LaurentPoly::variable(t, "v");
    LaurentPoly pairs = one;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            pairs *= (one - var_a(t, i) * var_a(t, j) * v.pow(2)) *
                     (one - var_a(t, i) * var_a(t, j).pow(-1) * v.pow(2));
    if (kind == Torus::nonsplit)
        return RationalFn(one, pairs);
    LaurentPoly b = LaurentPoly::variable(t, "b");
    LaurentPoly num = one;
    LaurentPoly squares = one;
    for (int i = 1; i <= n; ++i) {
        num *= (one - var_a(t, i) * b * v) * (one - var_a(t, i) * b.pow(-1) * v);
        squares *= one - var_a(t, i).pow(2) * v.pow(2);
    }
    return RationalFn(std::move(num), pairs * squares);
}

RationalFn c_function(const SignedPerm& w, int n, const VarTablePtr& table) {
    if (w.rank() != n)
        throw UsageError("rank mismatch");
    LaurentPoly one = LaurentPoly::constant(table, 1);
    LaurentPoly v2 = LaurentPoly::variable(table, "v").pow(2);
    LaurentPoly num = one, den = one;
    auto include_root = [&](const LaurentPoly& x) {
        num *= one - v2 * x;
        den *= one - x;
    };
    // Positive roots of type C_n through the monomials they attach to the
    // parameters; negativity of the image mirrors the length computation.
    for (int i = 0; i < n; ++i) {
        if (w.sign[i] < 0)
            include_root(var_a(table, i + 1).pow(2));
        for (int j = i + 1; j < n; ++j) {
            int pi = w.perm[i], pj = w.perm[j];
            int lead_minus = (pi < pj) ? w.sign[i] : -w.sign[j];
            if (lead_minus < 0)
                include_root(var_a(table, i + 1) * var_a(table, j + 1).pow(-1));
            int lead_plus = (pi < pj) ? w.sign[i] : w.sign[j];
            if (lead_plus < 0)
                include_root(var_a(table, i + 1) * var_a(table, j + 1));
        }
    }
    return RationalFn(std::move(num), std::move(den));
}

ScaledValue b_value(const BesselIndex& k, int n) {
    if (k.rank() != n)
        throw UsageError("coset index rank mismatch");
    VarTablePtr t = bessel_table(n, Torus::split);
    LaurentPoly one = LaurentPoly::constant(t, 1);
    LaurentPoly v = LaurentPoly::variable(t, "v");
    LaurentPoly b = LaurentPoly::variable(t, "b");
    const auto kp = k.partial_sums();

    LaurentPoly arg = (one - var_a(t, n) * b.pow(-1) * v) * var_a(t, 1).pow(-kp[n - 1] - n);
    for (int i = 1; i <= n - 1; ++i) {
        arg *= var_a(t, n + 1 - i).pow(-kp[i - 1] - i);
        arg *= (one - var_a(t, i) * b * v) * (one - var_a(t, i) * b.pow(-1) * v);
    }
    LaurentPoly quotient = exact_div(alternator(n, arg), weyl_denominator(n, t));
    LaurentPoly poly = v.pow(index_v_power(k, n)) * quotient;
    return ScaledValue::of(std::move(poly));
}

bool recursion_check(const BesselIndex& k, int n) {
    if (k.k[0] <= 0)
        throw UsageError("recursion identity requires k_1 > 0");
    VarTablePtr t = bessel_table(n, Torus::split);
    RationalFn one = RationalFn::one(t);
    RationalFn v2(LaurentPoly::variable(t, "v").pow(2));
    RationalFn b(LaurentPoly::variable(t, "b"));

    std::vector<int> shifted = k.k;
    shifted[0] -= 1;
    if (n >= 2)
        shifted[1] += 1;
    BesselIndex km(shifted);

    RationalFn lhs = h_value(k, n, Torus::split).as_rational();
    RationalFn rhs =
        (b_value(k, n).as_rational() - v2 * b * b_value(km, n).as_rational()) / (one - v2);
    return lhs == rhs;
}

bool region_so_odd(const SatakeNumeric& pt, int n) {
    Rational prev(0);
    for (int i = 1; i < n; ++i) {
        Rational cur = rational_abs(pt.at("a" + std::to_string(i)));
        if (i > 1 && !(prev < cur))
            return false;
        prev = cur;
    }
    Rational an = rational_abs(pt.at("a" + std::to_string(n)));
    Rational bound = std::min(an, Rational(1 / an));
    if (n == 1)
        return true;
    return prev < bound;
}

bool region_so_odd_split(const SatakeNumeric& pt, int n) {
    if (!region_so_odd(pt, n))
        return false;
    Rational an = rational_abs(pt.at("a" + std::to_string(n)));
    Rational ab = rational_abs(pt.at("b"));
    Rational bound = pt.sqrt_q * std::min(ab, Rational(1 / ab));
    return an < bound;
}

} // namespace wbm
