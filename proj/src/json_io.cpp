#include "wbm/json_io.hpp"

namespace wbm {

nlohmann::json to_json(const LaurentPoly& p) {
    nlohmann::json j;
    j["vars"] = p.table()->names();
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) {
        nlohmann::json t;
        t["exp"] = e;
        t["num"] = c.get_num().get_str();
        t["den"] = c.get_den().get_str();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

LaurentPoly laurent_from_json(const nlohmann::json& j) {
    if (!j.contains("vars") || !j.contains("terms"))
        throw UsageError("polynomial JSON needs \"vars\" and \"terms\"");
    VarTablePtr t = VarTable::make(j.at("vars").get<std::vector<std::string>>());
    LaurentPoly p = LaurentPoly::zero(t);
    for (const auto& term : j.at("terms")) {
        Exponents e = term.at("exp").get<Exponents>();
        Rational num = rational_from_string(term.at("num").get<std::string>());
        Rational den = rational_from_string(term.at("den").get<std::string>());
        if (den == 0)
            throw UsageError("zero denominator in polynomial JSON");
        Rational c = num / den;
        p.add_term(e, c);
    }
    return p;
}

nlohmann::json to_json(const RationalFn& f) {
    nlohmann::json j;
    j["num"] = to_json(f.num());
    j["den"] = to_json(f.den());
    return j;
}

nlohmann::json to_json(const ScaledValue& v) {
    nlohmann::json j;
    j["poly"] = to_json(v.poly);
    j["scalar"] = v.scalar.str();
    return j;
}

} // namespace wbm
