#pragma once

#include <gmpxx.h>

#include <string>

#include "wbm/errors.hpp"

namespace wbm {

// Exact arbitrary-precision rational.  GMP keeps values canonical
// (positive denominator, coprime) through arithmetic.
using Rational = mpq_class;

// Parses "7", "-3/5", "0".  Throws UsageError on malformed input or zero
// denominator.
Rational rational_from_string(const std::string& s);

std::string rational_to_string(const Rational& r);

// r^e with e of either sign; 0^negative throws PoleError.
Rational rational_pow(const Rational& r, long e);

// True when r = s^2 for rational s; stores the nonnegative root.
bool rational_sqrt(const Rational& r, Rational& root);

inline Rational rational_abs(const Rational& r) {
    Rational a = abs(r);
    return a;
}

} // namespace wbm
