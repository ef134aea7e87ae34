#include "wbm/numeric.hpp"

namespace wbm {

const char* torus_name(Torus t) {
    return t == Torus::split ? "split" : "nonsplit";
}

Torus torus_from_string(const std::string& s) {
    if (s == "split")
        return Torus::split;
    if (s == "nonsplit")
        return Torus::nonsplit;
    throw UsageError("torus kind must be split or nonsplit, got: " + s);
}

SatakeNumeric SatakeNumeric::make(const Rational& q, std::map<std::string, Rational> values) {
    SatakeNumeric pt;
    if (q <= 1)
        throw UsageError("q must exceed 1");
    if (!rational_sqrt(q, pt.sqrt_q))
        throw UsageError("q must be a perfect square of a rational so that q^(-1/2) is exact");
    pt.q = q;
    for (const auto& [name, val] : values) {
        if (val == 0)
            throw UsageError("parameter " + name + " must be nonzero");
        if (name == "v" || name == "q")
            throw UsageError("v and q are derived; assign only the Satake parameters");
    }
    pt.values = std::move(values);
    return pt;
}

const Rational& SatakeNumeric::at(const std::string& name) const {
    auto it = values.find(name);
    if (it == values.end())
        throw UsageError("numeric point has no value for " + name);
    return it->second;
}

std::map<std::string, Rational> SatakeNumeric::bindings() const {
    std::map<std::string, Rational> b = values;
    Rational v = 1 / sqrt_q;
    b.emplace("v", v);
    return b;
}

Rational eval_at(const LaurentPoly& p, const SatakeNumeric& pt) {
    return p.eval(pt.bindings());
}

Rational eval_at(const RationalFn& f, const SatakeNumeric& pt) {
    return f.eval(pt.bindings());
}

Rational eval_at(const ScaledValue& v, const SatakeNumeric& pt) {
    return v.eval(pt.bindings());
}

} // namespace wbm
