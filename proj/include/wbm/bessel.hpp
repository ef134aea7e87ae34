#pragma once

// SO(2n+1) layer: coset indexing, the explicit nonsplit and split model
// values as alternant quotients, the normalizing factors, the c-function
// (Gindikin-Karpelevich product over flipped positive roots), the
// symmetrized auxiliary value B(k), and the recursion identity tying the
// two together.
//
// Variables: v = q^(-1/2), a1..an, and b (split case only).

#include <vector>

#include "wbm/laurent.hpp"
#include "wbm/numeric.hpp"
#include "wbm/weyl.hpp"

namespace wbm {

// Coset index k = (k_1,...,k_n), all entries nonnegative, with partial
// sums k'_i = k_1 + ... + k_i.
struct BesselIndex {
    std::vector<int> k;

    explicit BesselIndex(std::vector<int> entries); // UsageError on negatives
    int rank() const { return static_cast<int>(k.size()); }
    std::vector<int> partial_sums() const;
    int total() const;
    bool operator<(const BesselIndex& o) const { return k < o.k; }
};

VarTablePtr bessel_table(int n, Torus kind); // {"v","a1",..,"an"[,"b"]}

// Power of v carrying the modular-character contribution of the coset
// representative: sum_i (n^2 - (i-1)^2) k_i.
int index_v_power(const BesselIndex& k, int n);

// Normalized model value at coset index k.  Computed as v-power times an
// alternant divided exactly by the Weyl denominator; scalar 1/(1+v^2) in
// the nonsplit case, 1/(1-v^2) in the split case with k_1 > 0, 1 in the
// split case with k_1 = 0.  Results are memoized by (n, kind, k).
ScaledValue h_value(const BesselIndex& k, int n, Torus kind);

// Factor relating the raw and normalized values; raw = normalized / factor.
RationalFn normalizing_factor(int n, Torus kind);

// Product over positive roots sent negative by w of
// (1 - v^2 x_r) / (1 - x_r), where x_r is a1 a2^(-1)-type, a1 a2-type, or
// a1^2-type according to the root.
RationalFn c_function(const SignedPerm& w, int n, const VarTablePtr& table);

// Symmetrized auxiliary value B(k) (split case); B(k) = h(k) when k_1 = 0,
// and for k_1 > 0 feeds the recursion below.
ScaledValue b_value(const BesselIndex& k, int n);

// Checks h(k) = (1-q^(-1))^(-1) (B(k) - q^(-1) b B(k_1-1, k_2+1, k_3, ...))
// exactly, for k_1 > 0.
bool recursion_check(const BesselIndex& k, int n);

// Strict region |a_1| < ... < |a_(n-1)| < min(|a_n|, |a_n|^(-1)).
bool region_so_odd(const SatakeNumeric& pt, int n);
// The same with the additional constraint |a_n| < q^(1/2) min(|b|, |b|^(-1)).
bool region_so_odd_split(const SatakeNumeric& pt, int n);

} // namespace wbm
