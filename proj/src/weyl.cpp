#include "wbm/weyl.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace wbm {

SignedPerm identity_perm(int n) {
    if (n < 1)
        throw UsageError("rank must be at least 1");
    SignedPerm w;
    w.perm.resize(n);
    std::iota(w.perm.begin(), w.perm.end(), 0);
    w.sign.assign(n, 1);
    w.length = 0;
    return w;
}

SignedPerm compose(const SignedPerm& w, const SignedPerm& u) {
    if (w.rank() != u.rank())
        throw UsageError("rank mismatch in composition");
    const int n = w.rank();
    SignedPerm out;
    out.perm.resize(n);
    out.sign.resize(n);
    // (w∘u)(a_i) = w(a_{u.perm[i]}^{u.sign[i]})
    for (int i = 0; i < n; ++i) {
        out.perm[i] = w.perm[u.perm[i]];
        out.sign[i] = w.sign[u.perm[i]] * u.sign[i];
    }
    out.length = coxeter_length(out.perm, out.sign);
    return out;
}

SignedPerm inverse(const SignedPerm& w) {
    const int n = w.rank();
    SignedPerm out;
    out.perm.resize(n);
    out.sign.resize(n);
    for (int i = 0; i < n; ++i) {
        out.perm[w.perm[i]] = i;
        out.sign[w.perm[i]] = w.sign[i];
    }
    out.length = coxeter_length(out.perm, out.sign);
    return out;
}

// Counts positive roots of type C_n sent negative.  Positive roots are
// e_i - e_j and e_i + e_j for i < j, and 2 e_i.  A two-term image
// c_p e_p + c_q e_q with p < q is negative exactly when c_p = -1.
int coxeter_length(const std::vector<int>& perm, const std::vector<int>& sign) {
    const int n = static_cast<int>(perm.size());
    int len = 0;
    for (int i = 0; i < n; ++i)
        if (sign[i] < 0)
            ++len; // image of 2 e_i
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            int pi = perm[i], pj = perm[j];
            // e_i - e_j maps to sign[i] e_pi - sign[j] e_pj
            int lead_minus = (pi < pj) ? sign[i] : -sign[j];
            if (lead_minus < 0)
                ++len;
            // e_i + e_j maps to sign[i] e_pi + sign[j] e_pj
            int lead_plus = (pi < pj) ? sign[i] : sign[j];
            if (lead_plus < 0)
                ++len;
        }
    }
    return len;
}

const std::vector<SignedPerm>& hyperoctahedral(int n) {
    if (n < 1)
        throw UsageError("rank must be at least 1");
    static std::map<int, std::vector<SignedPerm>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;

    std::vector<SignedPerm> group;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            SignedPerm w;
            w.perm = perm;
            w.sign.resize(n);
            for (int i = 0; i < n; ++i)
                w.sign[i] = (mask >> i) & 1 ? -1 : 1;
            w.length = coxeter_length(w.perm, w.sign);
            group.push_back(std::move(w));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return cache.emplace(n, std::move(group)).first->second;
}

// Indices of a1..an in the table, resolved once per call.
static std::vector<std::size_t> alpha_indices(const VarTablePtr& table, int n) {
    std::vector<std::size_t> idx(n);
    for (int i = 0; i < n; ++i)
        idx[i] = table->index("a" + std::to_string(i + 1));
    return idx;
}

LaurentPoly act(const SignedPerm& w, const LaurentPoly& p) {
    const int n = w.rank();
    const auto idx = alpha_indices(p.table(), n);
    LaurentPoly out = LaurentPoly::zero(p.table());
    for (const auto& [e, c] : p.terms()) {
        Exponents ne = e;
        for (int i = 0; i < n; ++i)
            ne[idx[i]] = 0;
        for (int i = 0; i < n; ++i)
            ne[idx[w.perm[i]]] += w.sign[i] * e[idx[i]];
        out.add_term(ne, c);
    }
    return out;
}

RationalFn act(const SignedPerm& w, const RationalFn& f) {
    return RationalFn(act(w, f.num()), act(w, f.den()));
}

LaurentPoly alternator(int n, const LaurentPoly& p) {
    LaurentPoly sum = LaurentPoly::zero(p.table());
    for (const auto& w : hyperoctahedral(n)) {
        LaurentPoly img = act(w, p);
        if (w.sgn() < 0)
            sum -= img;
        else
            sum += img;
    }
    return sum;
}

LaurentPoly symmetrize(int n, const LaurentPoly& p) {
    LaurentPoly sum = LaurentPoly::zero(p.table());
    for (const auto& w : hyperoctahedral(n))
        sum += act(w, p);
    return sum;
}

LaurentPoly weyl_denominator_product(int n, const VarTablePtr& table) {
    const auto idx = alpha_indices(table, n);
    LaurentPoly prod = LaurentPoly::constant(table, 1);
    for (int i = 0; i < n; ++i) {
        LaurentPoly ai = LaurentPoly::variable(table, table->name(idx[i]));
        // a_i^(-1+i-n) (1 - a_i^2), with i running 1..n
        prod *= ai.pow(-1 + (i + 1) - n) * (LaurentPoly::constant(table, 1) - ai.pow(2));
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            LaurentPoly ai = LaurentPoly::variable(table, table->name(idx[i]));
            LaurentPoly aj = LaurentPoly::variable(table, table->name(idx[j]));
            LaurentPoly one = LaurentPoly::constant(table, 1);
            prod *= (one - ai * aj) * (one - ai * aj.pow(-1));
        }
    }
    return prod;
}

LaurentPoly weyl_denominator(int n, const VarTablePtr& table) {
    const auto idx = alpha_indices(table, n);
    Exponents e(table->size(), 0);
    for (int i = 0; i < n; ++i)
        e[idx[i]] = n - i; // a1^n a2^(n-1) ... an
    LaurentPoly staircase = LaurentPoly::monomial(table, e);
    LaurentPoly alt = alternator(n, staircase);
    if (n % 2)
        alt *= Rational(-1);
    LaurentPoly prod = weyl_denominator_product(n, table);
    if (alt != prod)
        throw std::logic_error("Weyl denominator: alternant and product forms disagree");
    return alt;
}

bool is_weyl_invariant(int n, const LaurentPoly& p) {
    for (int i = 0; i + 1 < n; ++i) {
        SignedPerm s = identity_perm(n);
        std::swap(s.perm[i], s.perm[i + 1]);
        s.length = coxeter_length(s.perm, s.sign);
        if (act(s, p) != p)
            return false;
    }
    SignedPerm flip = identity_perm(n);
    flip.sign[n - 1] = -1;
    flip.length = coxeter_length(flip.perm, flip.sign);
    return act(flip, p) == p;
}

// ---------------------------------------------------------------------------
// Omega4

std::array<int, 3> gsp4_param_exponents(int j) {
    switch (j) {
    case 1: return {1, 0, 0};
    case 2: return {0, 1, 0};
    case 3: return {0, 0, 1};
    case 4: return {1, -1, 1}; // a4 = a1*a3/a2
    default: throw UsageError("parameter index must be 1..4");
    }
}

// The four parameters in the rank-2 coordinates (x0, x1, x2):
//   a1 = x0 x1 x2,  a2 = x0 x1,  a3 = x0,  a4 = x0 x2.
// A signed permutation w of (x1, x2) extends to the parameter torus by
// w(x0) = x0 * prod_{i flipped} x_{perm(i)}, which is what makes the set of
// four parameters stable.  Lengths carry over from the rank-2 group.
const std::vector<Omega4Elem>& omega4() {
    static std::vector<Omega4Elem> elems = [] {
        const std::array<std::array<int, 2>, 4> m = {{{1, 1}, {1, 0}, {0, 0}, {0, 1}}};
        std::vector<Omega4Elem> out;
        for (const auto& w : hyperoctahedral(2)) {
            Omega4Elem e;
            e.length = w.length;
            for (int j = 0; j < 4; ++j) {
                std::array<int, 2> img = {0, 0};
                for (int i = 0; i < 2; ++i) {
                    if (w.sign[i] < 0)
                        img[w.perm[i]] += 1; // contribution of w(x0)
                    img[w.perm[i]] += w.sign[i] * m[j][i];
                }
                int target = -1;
                for (int jj = 0; jj < 4; ++jj)
                    if (m[jj] == img)
                        target = jj;
                if (target < 0)
                    throw std::logic_error("parameter image escaped the four-element set");
                e.perm[j] = target;
            }
            out.push_back(e);
        }
        return out;
    }();
    return elems;
}

LaurentPoly act_omega4(const Omega4Elem& w, const LaurentPoly& p) {
    const VarTablePtr& t = p.table();
    const std::array<std::size_t, 3> idx = {t->index("a1"), t->index("a2"), t->index("a3")};
    LaurentPoly out = LaurentPoly::zero(t);
    for (const auto& [e, c] : p.terms()) {
        Exponents ne = e;
        for (int i = 0; i < 3; ++i)
            ne[idx[i]] = 0;
        for (int i = 0; i < 3; ++i) {
            const auto img = gsp4_param_exponents(w.perm[i] + 1);
            for (int k = 0; k < 3; ++k)
                ne[idx[k]] += e[idx[i]] * img[k];
        }
        out.add_term(ne, c);
    }
    return out;
}

LaurentPoly alternator_omega4(const LaurentPoly& p) {
    LaurentPoly sum = LaurentPoly::zero(p.table());
    for (const auto& w : omega4()) {
        LaurentPoly img = act_omega4(w, p);
        if (w.sgn() < 0)
            sum -= img;
        else
            sum += img;
    }
    return sum;
}

bool is_omega4_invariant(const LaurentPoly& p) {
    for (const auto& w : omega4())
        if (act_omega4(w, p) != p)
            return false;
    return true;
}

} // namespace wbm
