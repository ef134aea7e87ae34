#include "wbm/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace wbm {

Rational rational_from_string(const std::string& s) {
    if (s.empty())
        throw UsageError("empty rational literal");
    Rational r;
    try {
        r = Rational(s);
    } catch (const std::invalid_argument&) {
        throw UsageError("malformed rational literal: " + s);
    }
    if (r.get_den() == 0)
        throw UsageError("zero denominator in rational literal: " + s);
    r.canonicalize();
    return r;
}

std::string rational_to_string(const Rational& r) {
    return r.get_str();
}

Rational rational_pow(const Rational& r, long e) {
    if (e == 0)
        return Rational(1);
    if (r == 0) {
        if (e < 0)
            throw PoleError("zero raised to a negative power");
        return Rational(0);
    }
    const unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), r.get_num_mpz_t(), ae);
    mpz_pow_ui(out.get_den_mpz_t(), r.get_den_mpz_t(), ae);
    out.canonicalize();
    if (e < 0)
        out = 1 / out;
    return out;
}

bool rational_sqrt(const Rational& r, Rational& root) {
    if (r < 0)
        return false;
    if (mpz_perfect_square_p(r.get_num_mpz_t()) == 0)
        return false;
    if (mpz_perfect_square_p(r.get_den_mpz_t()) == 0)
        return false;
    Rational s;
    mpz_sqrt(s.get_num_mpz_t(), r.get_num_mpz_t());
    mpz_sqrt(s.get_den_mpz_t(), r.get_den_mpz_t());
    s.canonicalize();
    root = s;
    return true;
}

// --------------------------------------------------------------------------
// VarTable

VarTable::VarTable(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty())
            throw UsageError("empty variable name");
        auto [it, inserted] = index_.emplace(names_[i], i);
        (void)it;
        if (!inserted)
            throw UsageError("duplicate variable name: " + names_[i]);
    }
}

VarTablePtr VarTable::make(std::vector<std::string> names) {
    return VarTablePtr(new VarTable(std::move(names)));
}

std::optional<std::size_t> VarTable::find(std::string_view v) const {
    auto it = index_.find(v);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::size_t VarTable::index(std::string_view v) const {
    auto i = find(v);
    if (!i)
        throw UsageError("unknown variable: " + std::string(v));
    return *i;
}

bool same_table(const VarTablePtr& a, const VarTablePtr& b) {
    if (a == b)
        return true;
    if (!a || !b)
        return false;
    return *a == *b;
}

static void require_same_table(const VarTablePtr& a, const VarTablePtr& b) {
    if (!same_table(a, b))
        throw UsageError("operands use different variable tables");
}

// --------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(VarTablePtr t, TermMap terms)
    : table_(std::move(t)), terms_(std::move(terms)) {
    if (!table_)
        throw UsageError("null variable table");
}

LaurentPoly LaurentPoly::zero(VarTablePtr t) {
    return LaurentPoly(std::move(t), {});
}

LaurentPoly LaurentPoly::constant(VarTablePtr t, const Rational& c) {
    LaurentPoly p = zero(std::move(t));
    if (c != 0)
        p.terms_.emplace(Exponents(p.table_->size(), 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(VarTablePtr t, Exponents e, const Rational& c) {
    LaurentPoly p = zero(std::move(t));
    if (e.size() != p.table_->size())
        throw UsageError("exponent vector length does not match variable table");
    if (c != 0)
        p.terms_.emplace(std::move(e), c);
    return p;
}

LaurentPoly LaurentPoly::variable(VarTablePtr t, std::string_view name, int power) {
    const std::size_t i = t->index(name);
    Exponents e(t->size(), 0);
    e[i] = power;
    return monomial(std::move(t), std::move(e));
}

bool LaurentPoly::is_constant() const noexcept {
    if (terms_.empty())
        return true;
    if (terms_.size() != 1)
        return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rational LaurentPoly::constant_value() const {
    if (terms_.empty())
        return Rational(0);
    if (!is_constant())
        throw UsageError("polynomial is not constant");
    return terms_.begin()->second;
}

void LaurentPoly::add_term(const Exponents& e, const Rational& c) {
    if (e.size() != table_->size())
        throw UsageError("exponent vector length does not match variable table");
    if (c == 0)
        return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0)
        terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& r) {
    require_same_table(table_, r.table_);
    for (const auto& [e, c] : r.terms_)
        add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& r) {
    require_same_table(table_, r.table_);
    for (const auto& [e, c] : r.terms_) {
        Rational nc = -c;
        add_term(e, nc);
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    require_same_table(a.table_, b.table_);
    LaurentPoly out = LaurentPoly::zero(a.table_);
    const std::size_t n = a.table_->size();
    Exponents e(n, 0);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < n; ++i)
                e[i] = ea[i] + eb[i];
            Rational c = ca * cb;
            out.add_term(e, c);
        }
    }
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& r) {
    *this = *this * r;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coef] : terms_)
        coef *= c;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out = *this;
    for (auto& [e, c] : out.terms_)
        c = -c;
    return out;
}

bool LaurentPoly::operator==(const LaurentPoly& r) const {
    return same_table(table_, r.table_) && terms_ == r.terms_;
}

LaurentPoly LaurentPoly::pow(int e) const {
    if (e == 0)
        return constant(table_, 1);
    if (e < 0) {
        if (terms_.size() != 1)
            throw UsageError("negative power of a non-monomial");
        const auto& [exp, c] = *terms_.begin();
        Exponents ne(exp.size());
        for (std::size_t i = 0; i < exp.size(); ++i)
            ne[i] = exp[i] * e;
        return monomial(table_, std::move(ne), rational_pow(c, e));
    }
    LaurentPoly out = constant(table_, 1);
    LaurentPoly base = *this;
    int k = e;
    while (k > 0) {
        if (k & 1)
            out *= base;
        k >>= 1;
        if (k > 0)
            base *= base;
    }
    return out;
}

Exponents LaurentPoly::min_exponents() const {
    Exponents m(table_->size(), 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            m = e;
            first = false;
            continue;
        }
        for (std::size_t i = 0; i < m.size(); ++i)
            m[i] = std::min(m[i], e[i]);
    }
    return m;
}

LaurentPoly LaurentPoly::shifted(const Exponents& delta) const {
    if (delta.size() != table_->size())
        throw UsageError("shift vector length does not match variable table");
    TermMap out;
    for (const auto& [e, c] : terms_) {
        Exponents ne(e.size());
        for (std::size_t i = 0; i < e.size(); ++i)
            ne[i] = e[i] + delta[i];
        out.emplace(std::move(ne), c);
    }
    return LaurentPoly(table_, std::move(out));
}

Rational LaurentPoly::eval(const std::map<std::string, Rational>& point) const {
    // Resolve each variable once; only variables that actually occur need a
    // value.
    const std::size_t n = table_->size();
    std::vector<const Rational*> vals(n, nullptr);
    std::vector<bool> used(n, false);
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < n; ++i)
            if (e[i] != 0)
                used[i] = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (!used[i])
            continue;
        auto it = point.find(table_->name(i));
        if (it == point.end())
            throw UsageError("no value assigned to variable " + table_->name(i));
        vals[i] = &it->second;
    }
    Rational sum(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < n; ++i) {
            if (e[i] == 0)
                continue;
            if (*vals[i] == 0) {
                if (e[i] < 0)
                    throw PoleError("zero assigned to variable " + table_->name(i) +
                                    " occurring with negative exponent");
                term = 0;
                break;
            }
            term *= rational_pow(*vals[i], e[i]);
        }
        sum += term;
    }
    return sum;
}

std::string LaurentPoly::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = rational_abs(c);
        if (first) {
            if (c < 0)
                os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool any_var = std::any_of(e.begin(), e.end(), [](int x) { return x != 0; });
        bool coef_shown = false;
        if (!any_var || a != 1) {
            os << a.get_str();
            coef_shown = true;
        }
        bool first_var = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (coef_shown || !first_var)
                os << "*";
            os << table_->name(i);
            if (e[i] != 1)
                os << "^" << e[i];
            first_var = false;
        }
    }
    return os.str();
}

// --------------------------------------------------------------------------
// Exact division
//
// Laurent divisibility reduces to polynomial divisibility: strip the
// componentwise-minimal monomial from both operands (monomials are units),
// divide in the polynomial ring with lexicographic leading terms, and put
// the monomial difference back.  Each step cancels the current leading
// term, so the leading exponent strictly decreases in a well-ordered set
// and the loop terminates; a leading term that the divisor's leading term
// does not divide can never be cancelled later, so failing fast is sound.

std::optional<LaurentPoly> try_exact_div(const LaurentPoly& p, const LaurentPoly& d) {
    require_same_table(p.table(), d.table());
    if (d.is_zero())
        throw UsageError("division by the zero polynomial");
    if (p.is_zero())
        return LaurentPoly::zero(p.table());

    const std::size_t n = p.table()->size();
    Exponents mp = p.min_exponents();
    Exponents md = d.min_exponents();
    Exponents neg_mp(n), neg_md(n), back(n);
    for (std::size_t i = 0; i < n; ++i) {
        neg_mp[i] = -mp[i];
        neg_md[i] = -md[i];
        back[i] = mp[i] - md[i];
    }
    LaurentPoly r = p.shifted(neg_mp);
    const LaurentPoly dd = d.shifted(neg_md);

    const auto& dlead = *dd.terms().rbegin();
    LaurentPoly q = LaurentPoly::zero(p.table());
    Exponents te(n);
    while (!r.is_zero()) {
        const auto& rlead = *r.terms().rbegin();
        for (std::size_t i = 0; i < n; ++i) {
            te[i] = rlead.first[i] - dlead.first[i];
            if (te[i] < 0)
                return std::nullopt;
        }
        Rational tc = rlead.second / dlead.second;
        LaurentPoly t = LaurentPoly::monomial(p.table(), te, tc);
        q += t;
        r -= t * dd;
    }
    return q.shifted(back);
}

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& d) {
    auto q = try_exact_div(p, d);
    if (!q)
        throw NotDivisibleError("exact division failed");
    return *q;
}

// --------------------------------------------------------------------------
// RationalFn

RationalFn::RationalFn(LaurentPoly num)
    : num_(std::move(num)), den_(LaurentPoly::constant(num_.table(), 1)) {}

RationalFn::RationalFn(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    require_same_table(num_.table(), den_.table());
    if (den_.is_zero())
        throw UsageError("zero denominator");
    reduce();
}

RationalFn RationalFn::zero(VarTablePtr t) {
    return RationalFn(LaurentPoly::zero(std::move(t)));
}

RationalFn RationalFn::one(VarTablePtr t) {
    return RationalFn(LaurentPoly::constant(std::move(t), 1));
}

RationalFn RationalFn::constant(VarTablePtr t, const Rational& c) {
    return RationalFn(LaurentPoly::constant(std::move(t), c));
}

void RationalFn::reduce() {
    if (num_.is_zero()) {
        den_ = LaurentPoly::constant(num_.table(), 1);
        return;
    }
    // Common monomial factor (a unit of the Laurent ring).
    Exponents mn = num_.min_exponents();
    Exponents md = den_.min_exponents();
    const std::size_t n = mn.size();
    Exponents shift(n, 0);
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) {
        shift[i] = -std::min(mn[i], md[i]);
        any = any || shift[i] != 0;
    }
    if (any) {
        num_ = num_.shifted(shift);
        den_ = den_.shifted(shift);
    }
    // Normalize so the denominator's lex-leading coefficient is 1.
    Rational lead = den_.terms().rbegin()->second;
    if (lead != 1) {
        Rational inv = 1 / lead;
        num_ *= inv;
        den_ *= inv;
    }
    if (den_.is_constant())
        return;
    if (auto q = try_exact_div(num_, den_)) {
        num_ = std::move(*q);
        den_ = LaurentPoly::constant(num_.table(), 1);
        return;
    }
    if (auto q = try_exact_div(den_, num_)) {
        // num/den = 1/(den/num); renormalize the new denominator.
        den_ = std::move(*q);
        num_ = LaurentPoly::constant(den_.table(), 1);
        Rational l2 = den_.terms().rbegin()->second;
        if (l2 != 1) {
            Rational inv = 1 / l2;
            num_ *= inv;
            den_ *= inv;
        }
    }
}

bool RationalFn::is_one() const {
    return num_ == den_;
}

RationalFn RationalFn::inverse() const {
    if (is_zero())
        throw UsageError("inverse of zero");
    return RationalFn(den_, num_);
}

RationalFn& RationalFn::operator+=(const RationalFn& r) {
    require_same_table(table(), r.table());
    LaurentPoly n = num_ * r.den_ + r.num_ * den_;
    LaurentPoly d = den_ * r.den_;
    *this = RationalFn(std::move(n), std::move(d));
    return *this;
}

RationalFn& RationalFn::operator-=(const RationalFn& r) {
    require_same_table(table(), r.table());
    LaurentPoly n = num_ * r.den_ - r.num_ * den_;
    LaurentPoly d = den_ * r.den_;
    *this = RationalFn(std::move(n), std::move(d));
    return *this;
}

RationalFn& RationalFn::operator*=(const RationalFn& r) {
    require_same_table(table(), r.table());
    *this = RationalFn(num_ * r.num_, den_ * r.den_);
    return *this;
}

RationalFn& RationalFn::operator/=(const RationalFn& r) {
    require_same_table(table(), r.table());
    if (r.is_zero())
        throw UsageError("division by zero rational function");
    *this = RationalFn(num_ * r.den_, den_ * r.num_);
    return *this;
}

RationalFn RationalFn::operator-() const {
    RationalFn out = *this;
    out.num_ = -out.num_;
    return out;
}

bool RationalFn::operator==(const RationalFn& r) const {
    require_same_table(table(), r.table());
    return num_ * r.den_ == r.num_ * den_;
}

Rational RationalFn::eval(const std::map<std::string, Rational>& point) const {
    Rational d = den_.eval(point);
    if (d == 0)
        throw PoleError("denominator vanishes at the evaluation point");
    Rational n = num_.eval(point);
    return n / d;
}

std::string RationalFn::str() const {
    if (den_.is_constant() && den_.constant_value() == 1)
        return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

// --------------------------------------------------------------------------
// Substitution

RationalFn substitute(const LaurentPoly& p,
                      const std::map<std::string, RationalFn>& bindings,
                      const VarTablePtr& target) {
    const std::size_t n = p.table()->size();
    // Per-variable image, resolved once: either a bound rational function or
    // the same-named variable of the target table.
    std::vector<const RationalFn*> bound(n, nullptr);
    std::vector<std::optional<LaurentPoly>> carried(n);
    for (const auto& [name, fn] : bindings) {
        if (!same_table(fn.table(), target))
            throw UsageError("binding for " + name + " is not over the target table");
        auto i = p.table()->find(name);
        if (i)
            bound[*i] = &fn;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (bound[i])
            continue;
        const std::string& name = p.table()->name(i);
        if (target->find(name))
            carried[i] = LaurentPoly::variable(target, name);
    }

    RationalFn sum = RationalFn::zero(target);
    for (const auto& [e, c] : p.terms()) {
        LaurentPoly num = LaurentPoly::constant(target, c);
        LaurentPoly den = LaurentPoly::constant(target, 1);
        for (std::size_t i = 0; i < n; ++i) {
            if (e[i] == 0)
                continue;
            if (bound[i]) {
                const RationalFn& fn = *bound[i];
                if (fn.is_zero() && e[i] < 0)
                    throw PoleError("variable " + p.table()->name(i) +
                                    " bound to zero under a negative exponent");
                if (e[i] > 0) {
                    num *= fn.num().pow(e[i]);
                    den *= fn.den().pow(e[i]);
                } else {
                    num *= fn.den().pow(-e[i]);
                    den *= fn.num().pow(-e[i]);
                }
            } else if (carried[i]) {
                num *= carried[i]->pow(e[i]);
            } else {
                throw UsageError("variable " + p.table()->name(i) +
                                 " neither bound nor present in the target table");
            }
        }
        sum += RationalFn(std::move(num), std::move(den));
    }
    return sum;
}

RationalFn substitute(const RationalFn& f,
                      const std::map<std::string, RationalFn>& bindings,
                      const VarTablePtr& target) {
    RationalFn n = substitute(f.num(), bindings, target);
    RationalFn d = substitute(f.den(), bindings, target);
    if (d.is_zero())
        throw PoleError("denominator vanishes identically after substitution");
    return n / d;
}

// --------------------------------------------------------------------------
// ScaledValue

ScaledValue::ScaledValue(LaurentPoly p, RationalFn s)
    : poly(std::move(p)), scalar(std::move(s)) {
    if (!same_table(poly.table(), scalar.table()))
        throw UsageError("scalar and polynomial use different variable tables");
}

ScaledValue ScaledValue::of(LaurentPoly p) {
    RationalFn one = RationalFn::one(p.table());
    return ScaledValue(std::move(p), std::move(one));
}

RationalFn ScaledValue::as_rational() const {
    return scalar * RationalFn(poly);
}

Rational ScaledValue::eval(const std::map<std::string, Rational>& point) const {
    return scalar.eval(point) * poly.eval(point);
}

ScaledValue ScaledValue::cleared() const {
    if (scalar.is_one())
        return *this;
    LaurentPoly n = poly * scalar.num();
    if (auto q = try_exact_div(n, scalar.den()))
        return ScaledValue::of(std::move(*q));
    return *this;
}

} // namespace wbm
