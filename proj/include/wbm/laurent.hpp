#pragma once

// Exact sparse multivariate Laurent polynomials over the rationals, with
// named variables, and rational functions built from them.  These are the
// value types for every explicit formula in this library: by convention the
// variable "v" stands for q^(-1/2), so q^(-1) = v^2 and all half-integral
// powers of q stay polynomial.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wbm/errors.hpp"
#include "wbm/rational.hpp"

namespace wbm {

class VarTable;
using VarTablePtr = std::shared_ptr<const VarTable>;

// Fixed, ordered list of variable names.  Every exponent vector of a
// polynomial over this table has exactly size() entries.
class VarTable {
public:
    static VarTablePtr make(std::vector<std::string> names);

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const noexcept { return names_; }

    std::optional<std::size_t> find(std::string_view v) const;
    std::size_t index(std::string_view v) const; // UsageError when absent

    bool operator==(const VarTable& other) const { return names_ == other.names_; }

private:
    explicit VarTable(std::vector<std::string> names);
    std::vector<std::string> names_;
    std::map<std::string, std::size_t, std::less<>> index_;
};

bool same_table(const VarTablePtr& a, const VarTablePtr& b);

using Exponents = std::vector<int>;
// std::map orders terms lexicographically by exponent vector, which is the
// canonical serialization order.
using TermMap = std::map<Exponents, Rational>;

class RationalFn;

class LaurentPoly {
public:
    static LaurentPoly zero(VarTablePtr t);
    static LaurentPoly constant(VarTablePtr t, const Rational& c);
    static LaurentPoly monomial(VarTablePtr t, Exponents e, const Rational& c = Rational(1));
    static LaurentPoly variable(VarTablePtr t, std::string_view name, int power = 1);

    const VarTablePtr& table() const noexcept { return table_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    Rational constant_value() const; // UsageError unless constant (or zero)
    std::size_t term_count() const noexcept { return terms_.size(); }

    LaurentPoly& operator+=(const LaurentPoly& r);
    LaurentPoly& operator-=(const LaurentPoly& r);
    LaurentPoly& operator*=(const LaurentPoly& r);
    LaurentPoly& operator*=(const Rational& c);
    LaurentPoly operator-() const;

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
    friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }

    bool operator==(const LaurentPoly& r) const;
    bool operator!=(const LaurentPoly& r) const { return !(*this == r); }

    // e >= 0 for general polynomials; negative e only for monomials (which
    // are units of the Laurent ring).
    LaurentPoly pow(int e) const;

    // Componentwise minimum of exponents over all terms; zero vector when empty.
    Exponents min_exponents() const;
    // Multiply by the monomial x^delta.
    LaurentPoly shifted(const Exponents& delta) const;

    // Exact evaluation.  Every variable that occurs with nonzero exponent
    // must be assigned; zero assigned under a negative exponent is a pole.
    Rational eval(const std::map<std::string, Rational>& point) const;

    std::string str() const;

    void add_term(const Exponents& e, const Rational& c); // drops zeros

private:
    LaurentPoly(VarTablePtr t, TermMap terms);
    VarTablePtr table_;
    TermMap terms_;
};

// Quotient p/d in the Laurent ring, when it exists.
std::optional<LaurentPoly> try_exact_div(const LaurentPoly& p, const LaurentPoly& d);
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& d); // NotDivisibleError

// Quotient of two Laurent polynomials.  The representation is reduced on a
// best-effort basis (common monomial factors, scalar normalization, trial
// division); equality is decided by cross-multiplication and therefore does
// not depend on how far reduction got.
class RationalFn {
public:
    explicit RationalFn(LaurentPoly num);
    RationalFn(LaurentPoly num, LaurentPoly den); // UsageError if den == 0

    static RationalFn zero(VarTablePtr t);
    static RationalFn one(VarTablePtr t);
    static RationalFn constant(VarTablePtr t, const Rational& c);

    const LaurentPoly& num() const noexcept { return num_; }
    const LaurentPoly& den() const noexcept { return den_; }
    const VarTablePtr& table() const noexcept { return num_.table(); }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const;

    RationalFn inverse() const; // UsageError on zero

    RationalFn& operator+=(const RationalFn& r);
    RationalFn& operator-=(const RationalFn& r);
    RationalFn& operator*=(const RationalFn& r);
    RationalFn& operator/=(const RationalFn& r);
    RationalFn operator-() const;

    friend RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
    friend RationalFn operator-(RationalFn a, const RationalFn& b) { return a -= b; }
    friend RationalFn operator*(RationalFn a, const RationalFn& b) { return a *= b; }
    friend RationalFn operator/(RationalFn a, const RationalFn& b) { return a /= b; }

    // Cross-multiplied exact equality.
    bool operator==(const RationalFn& r) const;
    bool operator!=(const RationalFn& r) const { return !(*this == r); }

    Rational eval(const std::map<std::string, Rational>& point) const;

    std::string str() const;

private:
    void reduce();
    LaurentPoly num_, den_;
};

// Composes p with the given variable bindings.  Variables left unbound must
// exist in the target table and are carried through.  Binding a variable
// that occurs with negative exponent to zero throws PoleError.
RationalFn substitute(const LaurentPoly& p,
                      const std::map<std::string, RationalFn>& bindings,
                      const VarTablePtr& target);
RationalFn substitute(const RationalFn& f,
                      const std::map<std::string, RationalFn>& bindings,
                      const VarTablePtr& target);

// A Laurent polynomial carried together with an explicit scalar prefactor
// such as 1/(1+v^2).  Model values are presented in this shape so that
// holomorphy claims stay testable as literal polynomiality.
struct ScaledValue {
    LaurentPoly poly;
    RationalFn scalar;

    static ScaledValue of(LaurentPoly p);
    ScaledValue(LaurentPoly p, RationalFn s);

    RationalFn as_rational() const;
    Rational eval(const std::map<std::string, Rational>& point) const;

    // Folds the scalar into the polynomial when the division is exact.
    ScaledValue cleared() const;

    bool operator==(const ScaledValue& r) const { return as_rational() == r.as_rational(); }
    bool operator!=(const ScaledValue& r) const { return !(*this == r); }
};

} // namespace wbm
