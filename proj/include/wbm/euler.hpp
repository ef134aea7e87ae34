#pragma once

// Local Euler-factor identity at a good place: the product of two standard
// L-factors (one twisted by the quadratic character eta = +-1) equals the
// unfolding prefactor times the model value at the identity.  Variables:
// v = q^(-1/2), a1..an (Satake parameters), and u standing for the
// composite exponent q^(-n(s-1/2)-1/2), so that u^2 = q^(-1-2n(s-1/2)).

#include "wbm/laurent.hpp"

namespace wbm {

struct EulerInput {
    int n = 1;
    int eta = 1; // +1 (split) or -1 (inert)
};

VarTablePtr euler_table(int n); // {"v","a1",..,"an","u"}

// prod_i (1 - a_i u)^(-1) (1 - eta a_i u)^(-1).
RationalFn l_factor_product(const EulerInput& in);

// Model value at the identity after the substitution that folds the
// s-variable into the parameters:
// prod_{i<j} (1 - a_i a_j u^2)(1 - a_i a_j^(-1) v^2) * prod_i (1 + eta a_i u)/(1 - a_i u).
RationalFn h_identity_value(const EulerInput& in);

// prod_{i<=j} (1 - a_i a_j u^2)^(-1) * prod_{i<j} (1 - a_i a_j^(-1) v^2)^(-1).
RationalFn period_prefactor(const EulerInput& in);

// Exact check that prefactor * identity value = L-factor product (and the
// rearranged ratio form of the same identity).
bool verify_euler_identity(const EulerInput& in);

} // namespace wbm
