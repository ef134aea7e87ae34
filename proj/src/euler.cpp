#include "wbm/euler.hpp"

#include <map>
#include <mutex>

namespace wbm {

VarTablePtr euler_table(int n) {
    if (n < 1)
        throw UsageError("rank must be at least 1");
    static std::map<int, VarTablePtr> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;
    std::vector<std::string> names = {"v"};
    for (int i = 1; i <= n; ++i)
        names.push_back("a" + std::to_string(i));
    names.push_back("u");
    return cache.emplace(n, VarTable::make(std::move(names))).first->second;
}

namespace {

void check_eta(const EulerInput& in) {
    if (in.eta != 1 && in.eta != -1)
        throw UsageError("eta must be +1 or -1");
}

LaurentPoly var_a(const VarTablePtr& t, int i) {
    return LaurentPoly::variable(t, "a" + std::to_string(i));
}

} // namespace

RationalFn l_factor_product(const EulerInput& in) {
    check_eta(in);
    VarTablePtr t = euler_table(in.n);
    LaurentPoly one = LaurentPoly::constant(t, 1);
    LaurentPoly u = LaurentPoly::variable(t, "u");
    LaurentPoly den = one;
    for (int i = 1; i <= in.n; ++i) {
        LaurentPoly au = var_a(t, i) * u;
        den *= (one - au) * (one - Rational(in.eta) * au);
    }
    return RationalFn(std::move(one), std::move(den));
}

RationalFn h_identity_value(const EulerInput& in) {
    check_eta(in);
    VarTablePtr t = euler_table(in.n);
    LaurentPoly one = LaurentPoly::constant(t, 1);
    LaurentPoly u = LaurentPoly::variable(t, "u");
    LaurentPoly v = LaurentPoly::variable(t, "v");
    LaurentPoly num = one;
    for (int i = 1; i <= in.n; ++i)
        for (int j = i + 1; j <= in.n; ++j)
            num *= (one - var_a(t, i) * var_a(t, j) * u.pow(2)) *
                   (one - var_a(t, i) * var_a(t, j).pow(-1) * v.pow(2));
    LaurentPoly den = one;
    for (int i = 1; i <= in.n; ++i) {
        num *= one + Rational(in.eta) * var_a(t, i) * u;
        den *= one - var_a(t, i) * u;
    }
    return RationalFn(std::move(num), std::move(den));
}

RationalFn period_prefactor(const EulerInput& in) {
    VarTablePtr t = euler_table(in.n);
    LaurentPoly one = LaurentPoly::constant(t, 1);
    LaurentPoly u = LaurentPoly::variable(t, "u");
    LaurentPoly v = LaurentPoly::variable(t, "v");
    LaurentPoly den = one;
    for (int i = 1; i <= in.n; ++i)
        for (int j = i; j <= in.n; ++j)
            den *= one - var_a(t, i) * var_a(t, j) * u.pow(2);
    for (int i = 1; i <= in.n; ++i)
        for (int j = i + 1; j <= in.n; ++j)
            den *= one - var_a(t, i) * var_a(t, j).pow(-1) * v.pow(2);
    return RationalFn(std::move(one), std::move(den));
}

bool verify_euler_identity(const EulerInput& in) {
    RationalFn lhs = period_prefactor(in) * h_identity_value(in);
    RationalFn target = l_factor_product(in);
    if (lhs != target)
        return false;
    // Same identity read as a ratio: the L-factor divided by the prefactor
    // must reproduce the identity value, isolating the diagonal factors.
    return target / period_prefactor(in) == h_identity_value(in);
}

} // namespace wbm
