#pragma once

// GSp(4) layer: explicit model values at the coset indices (k, l) in the
// four parameters a1..a4 subject to a1 a3 = a2 a4, and b1, b2 subject to
// a1 a3 = b1 b2 in the split case.  The relations are made identities by
// eliminating a4 = a1 a3 / a2 and b2 = a1 a3 / b1, so values live in the
// Laurent ring over {v, a1, a2, a3} (plus b1 when split).

#include <optional>
#include <string>
#include <vector>

#include "wbm/laurent.hpp"
#include "wbm/numeric.hpp"

namespace wbm {

VarTablePtr gsp4_table(Torus kind); // {"v","a1","a2","a3"[,"b1"]}

// Normalized model value at coset index (k, l), k, l >= 0.  An alternant
// over the order-8 parameter group divided exactly by the alternant of
// a3^2 a4^(-1); scalar 1/(1+v^2) in the nonsplit case, and in the split
// case 1 when l = 0 or 1/(1-v^2) when l > 0.
ScaledValue h_gsp4(int k, int l, Torus kind);

// Factor relating raw and normalized values; raw = normalized / factor.
RationalFn normalizing_factor_gsp4(Torus kind);

// Candidate monomial dictionary between the rank-2 odd-orthogonal
// parameters and the GSp(4) parameters.  Values are matched at random
// numeric points normalized to a trivial central character (a1 a3 = 1,
// hence b1 b2 = 1); dictionary monomials are reported over (v, a1, a2)
// with the a3 exponent eliminated on that locus.
struct DictionaryMatch {
    Exponents alpha1; // image of the first rank-2 parameter over (v, a1, a2)
    Exponents alpha2;
    std::optional<Exponents> beta; // split case: image of b over (v,a1,a2,b1)
    bool swap_indices = false;     // (k1,k2) = (l,k) when false, (k,l) when true
    std::string describe() const;
};

struct DictionarySearchOptions {
    int max_var_exp = 1;  // parameter exponents searched in [-max, max]
    int max_v_exp = 2;    // v exponents searched in [-max, max]
    unsigned long seed = 7;
    int index_bound = 2;  // match all (k,l) with k+l <= bound
    Torus kind = Torus::nonsplit;
};

std::vector<DictionaryMatch> find_parameter_dictionary(const DictionarySearchOptions& opt);

} // namespace wbm
