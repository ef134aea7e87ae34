#include "wbm/gsp4.hpp"

#include <map>
#include <mutex>
#include <random>
#include <sstream>

#include "wbm/bessel.hpp"
#include "wbm/weyl.hpp"

namespace wbm {

VarTablePtr gsp4_table(Torus kind) {
    static VarTablePtr nonsplit = VarTable::make({"v", "a1", "a2", "a3"});
    static VarTablePtr split = VarTable::make({"v", "a1", "a2", "a3", "b1"});
    return kind == Torus::split ? split : nonsplit;
}

namespace {

// Monomial a1^e1 a2^e2 a3^e3 a4^e4 in the eliminated presentation.
LaurentPoly param_monomial(const VarTablePtr& t, int e1, int e2, int e3, int e4) {
    Exponents e(t->size(), 0);
    const std::array<std::size_t, 3> idx = {t->index("a1"), t->index("a2"), t->index("a3")};
    const std::array<int, 4> in = {e1, e2, e3, e4};
    for (int j = 0; j < 4; ++j) {
        const auto img = gsp4_param_exponents(j + 1);
        for (int k = 0; k < 3; ++k)
            e[idx[k]] += in[j] * img[k];
    }
    return LaurentPoly::monomial(t, std::move(e));
}

// b2^(-1) = b1 / (a1 a3).
LaurentPoly beta_inverse(const VarTablePtr& t, int j) {
    Exponents e(t->size(), 0);
    if (j == 1) {
        e[t->index("b1")] = -1;
    } else {
        e[t->index("b1")] = 1;
        e[t->index("a1")] = -1;
        e[t->index("a3")] = -1;
    }
    return LaurentPoly::monomial(t, std::move(e));
}

LaurentPoly denominator_alternant(const VarTablePtr& t) {
    return alternator_omega4(param_monomial(t, 0, 0, 2, -1));
}

} // namespace

ScaledValue h_gsp4(int k, int l, Torus kind) {
    if (k < 0 || l < 0)
        throw UsageError("coset indices must be nonnegative");
    static std::map<std::tuple<int, int, Torus>, ScaledValue> memo;
    static std::mutex mu;
    auto key = std::make_tuple(k, l, kind);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(key);
        if (it != memo.end())
            return it->second;
    }

    VarTablePtr t = gsp4_table(kind);
    LaurentPoly one = LaurentPoly::constant(t, 1);
    LaurentPoly v = LaurentPoly::variable(t, "v");
    RationalFn scalar = RationalFn::one(t);
    LaurentPoly arg = one;
    int vpow = 3 * k + 4 * l;

    if (kind == Torus::nonsplit) {
        arg = param_monomial(t, 0, l, k + l + 2, -1) *
              (one - param_monomial(t, 1, 0, -1, 0) * v.pow(2)) *
              (one - param_monomial(t, 0, -1, 0, 1) * v.pow(2));
        scalar = RationalFn(one, one + v.pow(2));
    } else if (l == 0) {
        LaurentPoly a1 = LaurentPoly::variable(t, "a1");
        arg = param_monomial(t, 0, 0, k + 2, -1) * (one - a1 * beta_inverse(t, 1) * v) *
              (one - a1 * beta_inverse(t, 2) * v);
        vpow = 3 * k;
    } else {
        arg = param_monomial(t, 0, l, k + l + 2, -1);
        for (int i : {1, 4}) {
            LaurentPoly ai = param_monomial(t, i == 1 ? 1 : 0, 0, 0, i == 4 ? 1 : 0);
            for (int j : {1, 2})
                arg *= one - ai * beta_inverse(t, j) * v;
        }
        scalar = RationalFn(one, one - v.pow(2));
    }

    LaurentPoly quotient = exact_div(alternator_omega4(arg), denominator_alternant(t));
    ScaledValue value =
        ScaledValue(v.pow(vpow) * quotient, std::move(scalar)).cleared();
    std::lock_guard<std::mutex> lock(mu);
    return memo.emplace(std::move(key), std::move(value)).first->second;
}

RationalFn normalizing_factor_gsp4(Torus kind) {
    VarTablePtr t = gsp4_table(kind);
    LaurentPoly one = LaurentPoly::constant(t, 1);
    LaurentPoly v2 = LaurentPoly::variable(t, "v").pow(2);
    if (kind == Torus::nonsplit) {
        LaurentPoly den = (one - param_monomial(t, 1, -1, 0, 0) * v2) *
                          (one - param_monomial(t, 0, 1, -1, 0) * v2);
        return RationalFn(one, std::move(den));
    }
    LaurentPoly v = LaurentPoly::variable(t, "v");
    LaurentPoly num = one;
    for (int i : {1, 2})
        for (int j : {1, 2}) {
            LaurentPoly ai = param_monomial(t, i == 1 ? 1 : 0, i == 2 ? 1 : 0, 0, 0);
            num *= one - ai * beta_inverse(t, j) * v;
        }
    LaurentPoly den = (one - param_monomial(t, 1, -1, 0, 0) * v2) *
                      (one - param_monomial(t, 1, 0, -1, 0) * v2) *
                      (one - param_monomial(t, 0, 1, -1, 0) * v2) *
                      (one - param_monomial(t, 0, 1, 0, -1) * v2);
    return RationalFn(std::move(num), std::move(den));
}

// ---------------------------------------------------------------------------
// Dictionary search

std::string DictionaryMatch::describe() const {
    auto mono = [](const Exponents& e, const std::vector<std::string>& names) {
        std::ostringstream os;
        bool any = false;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (any)
                os << "*";
            os << names[i];
            if (e[i] != 1)
                os << "^" << e[i];
            any = true;
        }
        return any ? os.str() : std::string("1");
    };
    std::vector<std::string> names = {"v", "a1", "a2"};
    std::ostringstream os;
    os << "alpha1 -> " << mono(alpha1, names) << ", alpha2 -> " << mono(alpha2, names);
    if (beta) {
        std::vector<std::string> bn = {"v", "a1", "a2", "b1"};
        os << ", beta -> " << mono(*beta, bn);
    }
    os << ", (k1,k2) = " << (swap_indices ? "(k,l)" : "(l,k)")
       << "  [on the locus a1*a3 = 1, b1*b2 = 1]";
    return os.str();
}

namespace {

Rational eval_monomial(const Exponents& e, const std::vector<Rational>& vals) {
    Rational out(1);
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0)
            out *= rational_pow(vals[i], e[i]);
    return out;
}

std::vector<Exponents> candidate_exponents(int nvars, int max_var_exp, int max_v_exp) {
    std::vector<Exponents> out;
    Exponents e(nvars, 0);
    // slot 0 is v, the rest are parameters
    std::vector<int> lo(nvars), hi(nvars);
    lo[0] = -max_v_exp;
    hi[0] = max_v_exp;
    for (int i = 1; i < nvars; ++i) {
        lo[i] = -max_var_exp;
        hi[i] = max_var_exp;
    }
    for (int i = 0; i < nvars; ++i)
        e[i] = lo[i];
    while (true) {
        bool all_zero_params = true;
        for (int i = 1; i < nvars; ++i)
            if (e[i] != 0)
                all_zero_params = false;
        if (!all_zero_params)
            out.push_back(e);
        int i = 0;
        while (i < nvars && e[i] == hi[i]) {
            e[i] = lo[i];
            ++i;
        }
        if (i == nvars)
            break;
        ++e[i];
    }
    return out;
}

} // namespace

std::vector<DictionaryMatch> find_parameter_dictionary(const DictionarySearchOptions& opt) {
    std::mt19937_64 rng(opt.seed);
    const std::vector<Rational> pool = {Rational(2),     Rational(3),     Rational(5),
                                        Rational(7),     Rational(1, 2),  Rational(2, 3),
                                        Rational(3, 5),  Rational(5, 7),  Rational(4, 3),
                                        Rational(7, 2)};
    auto draw = [&]() { return pool[rng() % pool.size()]; };

    // Points are normalized to trivial central character: a3 = 1/a1, so the
    // model values on the two groups can agree without a similitude twist.
    const int npoints = 2;
    std::vector<std::vector<Rational>> points; // (v, a1, a2, a3, b1) values
    for (int p = 0; p < npoints; ++p) {
        std::vector<Rational> vals;
        vals.push_back(Rational(1, 3)); // v for q = 9
        Rational a1 = draw();
        vals.push_back(a1);
        vals.push_back(draw());
        vals.push_back(1 / a1);
        vals.push_back(draw());
        points.push_back(std::move(vals));
    }

    std::vector<std::pair<int, int>> indices;
    for (int k = 0; k <= opt.index_bound; ++k)
        for (int l = 0; l + k <= opt.index_bound; ++l)
            if (k + l > 0)
                indices.emplace_back(k, l);

    // Numeric GSp(4) values per index and point, both orientations of the
    // rank-2 values preloaded symbolically.
    auto gsp_numeric = [&](Torus kind) {
        std::map<std::pair<int, int>, std::vector<Rational>> out;
        for (auto [k, l] : indices) {
            std::vector<Rational> per_point;
            for (const auto& vals : points) {
                std::map<std::string, Rational> bind = {
                    {"v", vals[0]}, {"a1", vals[1]}, {"a2", vals[2]}, {"a3", vals[3]}};
                if (kind == Torus::split)
                    bind.emplace("b1", vals[4]);
                per_point.push_back(h_gsp4(k, l, kind).eval(bind));
            }
            out.emplace(std::make_pair(k, l), std::move(per_point));
        }
        return out;
    };

    std::map<std::pair<int, int>, ScaledValue> so5;
    for (auto [k, l] : indices) {
        for (auto [k1, k2] : {std::make_pair(l, k), std::make_pair(k, l)}) {
            auto key = std::make_pair(k1, k2);
            if (!so5.count(key))
                so5.emplace(key, h_value(BesselIndex({k1, k2}), 2, opt.kind));
        }
    }
    auto so5_value = [&](int k1, int k2, const Rational& v0, const Rational& x1,
                         const Rational& x2, const Rational* bval) {
        std::map<std::string, Rational> bind = {{"v", v0}, {"a1", x1}, {"a2", x2}};
        if (bval)
            bind.emplace("b", *bval);
        return so5.at({k1, k2}).eval(bind);
    };

    // Pass 1: the parameter dictionary, matched against nonsplit values
    // when searching nonsplit, or jointly with beta below when split.
    const auto cands = candidate_exponents(3, opt.max_var_exp, opt.max_v_exp);
    std::vector<DictionaryMatch> matches;

    if (opt.kind == Torus::nonsplit) {
        const auto gsp_vals = gsp_numeric(Torus::nonsplit);
        for (const auto& e1 : cands) {
            for (const auto& e2 : cands) {
                for (bool swap_idx : {false, true}) {
                    bool ok = true;
                    for (std::size_t pi = 0; ok && pi < points.size(); ++pi) {
                        const auto& vals = points[pi];
                        Rational x1 = eval_monomial(e1, vals);
                        Rational x2 = eval_monomial(e2, vals);
                        for (auto [k, l] : indices) {
                            int k1 = swap_idx ? k : l;
                            int k2 = swap_idx ? l : k;
                            if (so5_value(k1, k2, vals[0], x1, x2, nullptr) !=
                                gsp_vals.at({k, l})[pi]) {
                                ok = false;
                                break;
                            }
                        }
                    }
                    if (ok) {
                        DictionaryMatch m;
                        m.alpha1 = e1;
                        m.alpha2 = e2;
                        m.swap_indices = swap_idx;
                        matches.push_back(std::move(m));
                    }
                }
            }
        }
        return matches;
    }

    // Split case: reuse the nonsplit alpha dictionary, then search beta.
    DictionarySearchOptions alpha_opt = opt;
    alpha_opt.kind = Torus::nonsplit;
    const auto alpha_matches = find_parameter_dictionary(alpha_opt);

    std::vector<Exponents> beta_cands;
    for (int s : {1, -1}) {
        Exponents plain(4, 0);
        plain.push_back(s);
        beta_cands.push_back(std::move(plain));
        for (const auto& e : cands) {
            Exponents b = e;
            b.push_back(s);
            beta_cands.push_back(std::move(b));
        }
    }

    const auto gsp_vals = gsp_numeric(Torus::split);
    for (const auto& am : alpha_matches) {
        for (const auto& be : beta_cands) {
            bool ok = true;
            for (std::size_t pi = 0; ok && pi < points.size(); ++pi) {
                const auto& vals = points[pi];
                Rational x1 = eval_monomial(am.alpha1, vals);
                Rational x2 = eval_monomial(am.alpha2, vals);
                const std::vector<Rational> bvals = {vals[0], vals[1], vals[2], vals[4]};
                Rational bv = eval_monomial(be, bvals);
                for (auto [k, l] : indices) {
                    int k1 = am.swap_indices ? k : l;
                    int k2 = am.swap_indices ? l : k;
                    if (so5_value(k1, k2, vals[0], x1, x2, &bv) != gsp_vals.at({k, l})[pi]) {
                        ok = false;
                        break;
                    }
                }
            }
            if (ok) {
                DictionaryMatch m = am;
                m.beta = be;
                matches.push_back(std::move(m));
            }
        }
    }
    return matches;
}

} // namespace wbm
