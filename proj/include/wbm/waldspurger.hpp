#pragma once

// GL(2) layer: normalized Waldspurger values on the double-coset
// representatives indexed by k >= 0, the normalizing factor, GL(2)
// Whittaker values, the rank-1 Macdonald spherical value, convergence
// region predicates, and an independent exact-integration oracle that
// evaluates the defining torus integral shell by shell.
//
// Variables: v = q^(-1/2), g1, g2 (torus parameters), t (twisting
// character value).

#include "wbm/laurent.hpp"
#include "wbm/numeric.hpp"

namespace wbm {

VarTablePtr gl2_table(); // {"v", "g1", "g2", "t"}

// Normalized Waldspurger value at coset index k.  The two-term closed form
// is assembled over the common denominator (1 - g1^(-1) g2)(1 - g1 g2^(-1))
// and divided exactly; the scalar 1/(1-v^2) is carried explicitly (it
// clears at k = 0, where the value is 1).  Symmetric in g1 <-> g2.
ScaledValue waldspurger_value(int k);

// Factor relating the raw and normalized values:
// (1 - g1 t^(-1) v)(1 - g2^(-1) t v) / (1 - g1 g2^(-1) v^2).
// raw = normalized / factor.
RationalFn waldspurger_normalizer();

// Whittaker value at diag(pi^k, 1): zero for k < 0, otherwise
// v^k (1 - g1 g2^(-1) v^2) (g1^(k+1) - g2^(k+1)) / (g1 - g2).
LaurentPoly whittaker_value(int k);
// The symmetric normalized variant v^k (g1^(k+1) - g2^(k+1)) / (g1 - g2).
LaurentPoly whittaker_normalized(int k);

// Rank-1 Macdonald spherical value in the variable `alpha` of `table`
// (which must also contain "v"):
// (1 + v^2)^(-1) v^k [ (y - y^(-1) v^2) y^k - (y^(-1) - y v^2) y^(-k) ] / (y - y^(-1)).
ScaledValue macdonald_spherical(int k, const VarTablePtr& table, const std::string& alpha);

// Strict convergence region |g1 t^(-1)| < q^(1/2), |g2^(-1) t| < q^(1/2).
bool region_gl2(const SatakeNumeric& pt);

// Exact value of the raw (un-normalized) Waldspurger integral at coset
// index k, computed by decomposing the torus into valuation shells and
// summing the resulting geometric series in closed form.  Requires
// region_gl2(pt); the point must carry g1, g2, t.
Rational waldspurger_integral_oracle(int k, const SatakeNumeric& pt);

// Consistency of the Casselman-basis recursion: with the two intertwining
// coefficients of the basis expansion and the explicitly summed value of
// the functional on the long-cell basis vector, the recursion determines
// every coset value from the k = 0 normalization.  Checks indices 1..kmax
// symbolically.
bool casselman_recursion_check(int kmax);

} // namespace wbm
