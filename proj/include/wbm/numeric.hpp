#pragma once

// Exact rational evaluation points for the Satake-type parameters.  The
// residue cardinality q is restricted to perfect squares of rationals so
// that v = q^(-1/2) is itself rational and every evaluation stays exact.

#include <map>
#include <string>

#include "wbm/laurent.hpp"

namespace wbm {

enum class Torus { split, nonsplit };

const char* torus_name(Torus t);
Torus torus_from_string(const std::string& s); // UsageError

struct SatakeNumeric {
    Rational q;
    Rational sqrt_q;
    std::map<std::string, Rational> values; // nonzero assignments, "v" excluded

    // Validates q > 1 and q a perfect square; every assignment nonzero.
    static SatakeNumeric make(const Rational& q, std::map<std::string, Rational> values);

    const Rational& at(const std::string& name) const; // UsageError when absent

    // Assignments plus v = 1/sqrt(q), ready for eval().
    std::map<std::string, Rational> bindings() const;
};

Rational eval_at(const LaurentPoly& p, const SatakeNumeric& pt);
Rational eval_at(const RationalFn& f, const SatakeNumeric& pt);
Rational eval_at(const ScaledValue& v, const SatakeNumeric& pt);

} // namespace wbm
