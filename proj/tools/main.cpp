// Command-line front end: one subcommand per layer, JSON/CSV/pretty output,
// and a `verify` subcommand running the full exact check suite.

#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "wbm/bessel.hpp"
#include "wbm/euler.hpp"
#include "wbm/gsp4.hpp"
#include "wbm/json_io.hpp"
#include "wbm/numeric.hpp"
#include "wbm/verify.hpp"
#include "wbm/waldspurger.hpp"
#include "wbm/weyl.hpp"

namespace {

using nlohmann::json;
using namespace wbm;

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(item);
    return out;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    for (const auto& item : split_list(s)) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw UsageError("expected integer list, got: " + s);
        }
    }
    return out;
}

// "q,x1,x2,..." assigned to the given variable names in order.
SatakeNumeric parse_point(const std::string& s, const std::vector<std::string>& names) {
    auto parts = split_list(s);
    if (parts.size() != names.size() + 1)
        throw UsageError("numeric point needs q plus " + std::to_string(names.size()) +
                         " values");
    Rational q = rational_from_string(parts[0]);
    std::map<std::string, Rational> vals;
    for (std::size_t i = 0; i < names.size(); ++i)
        vals.emplace(names[i], rational_from_string(parts[i + 1]));
    return SatakeNumeric::make(q, std::move(vals));
}

// Either a single index "K" or an inclusive range "A..B".
std::pair<int, int> parse_index_range(const std::string& s) {
    auto pos = s.find("..");
    try {
        if (pos == std::string::npos) {
            int k = std::stoi(s);
            return {k, k};
        }
        int a = std::stoi(s.substr(0, pos));
        int b = std::stoi(s.substr(pos + 2));
        if (b < a)
            throw UsageError("empty index range: " + s);
        return {a, b};
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception&) {
        throw UsageError("expected K or A..B, got: " + s);
    }
}

enum class Format { json_fmt, csv, pretty };

Format parse_format(const std::string& s) {
    if (s == "json")
        return Format::json_fmt;
    if (s == "csv")
        return Format::csv;
    if (s == "pretty")
        return Format::pretty;
    throw UsageError("format must be json, csv or pretty");
}

void emit_value(Format fmt, const json& report) {
    if (fmt == Format::json_fmt) {
        std::cout << report.dump(2) << "\n";
        return;
    }
    if (fmt == Format::csv) {
        if (report.contains("rows")) {
            std::cout << "index,scalar,value\n";
            for (const auto& row : report.at("rows"))
                std::cout << row.at("index").get<std::string>() << ","
                          << row.at("scalar").get<std::string>() << ",\""
                          << row.at("value").get<std::string>() << "\"\n";
        } else {
            std::cout << "key,value\n";
            for (const auto& [key, val] : report.items())
                std::cout << key << ",\""
                          << (val.is_string() ? val.get<std::string>() : val.dump()) << "\"\n";
        }
        return;
    }
    // pretty
    if (report.contains("rows")) {
        for (const auto& row : report.at("rows"))
            std::cout << row.at("index").get<std::string>() << " : "
                      << row.at("scalar").get<std::string>() << " * ( "
                      << row.at("value").get<std::string>() << " )\n";
        return;
    }
    std::cout << report.dump(2) << "\n";
}

json scaled_report(const ScaledValue& value) {
    json j;
    j["value"] = to_json(value.poly);
    j["scalar"] = value.scalar.str();
    return j;
}

int run_waldspurger(const std::string& krange, const std::string& numeric, bool oracle,
                    Format fmt) {
    auto [k_lo, k_hi] = parse_index_range(krange);
    if (k_lo < 0)
        throw UsageError("coset index must be nonnegative");
    json report;
    report["op"] = "waldspurger";
    report["inputs"] = {{"k", krange}};

    std::optional<SatakeNumeric> pt;
    if (!numeric.empty()) {
        pt = parse_point(numeric, {"g1", "g2", "t"});
        report["inputs"]["numeric"] = numeric;
    }
    if (oracle && !pt)
        throw UsageError("--oracle requires --numeric q,g1,g2,t");

    if (k_lo == k_hi) {
        int k = k_lo;
        ScaledValue val = waldspurger_value(k);
        if (pt) {
            Rational formula = eval_at(val, *pt);
            report["value"] = rational_to_string(formula);
            report["scalar"] = "1";
            if (oracle) {
                if (!region_gl2(*pt))
                    throw RegionError("numeric point violates the convergence region");
                Rational raw = waldspurger_integral_oracle(k, *pt);
                Rational combined = raw * eval_at(waldspurger_normalizer(), *pt);
                report["oracle"] = rational_to_string(combined);
                report["checks"] = json::array({json{{"name", "oracle-equals-formula"},
                                                     {"pass", combined == formula},
                                                     {"witness",
                                                      {{"oracle", rational_to_string(combined)},
                                                       {"formula", rational_to_string(formula)}}}}});
                emit_value(fmt, report);
                return combined == formula ? 0 : 1;
            }
        } else {
            report.update(scaled_report(val));
        }
        emit_value(fmt, report);
        return 0;
    }

    json rows = json::array();
    for (int k = k_lo; k <= k_hi; ++k) {
        ScaledValue val = waldspurger_value(k);
        json row;
        row["index"] = std::to_string(k);
        if (pt) {
            row["scalar"] = "1";
            row["value"] = rational_to_string(eval_at(val, *pt));
        } else {
            row["scalar"] = val.scalar.str();
            row["value"] = val.poly.str();
        }
        rows.push_back(std::move(row));
    }
    report["rows"] = std::move(rows);
    emit_value(fmt, report);
    return 0;
}

int run_bessel(int n, const std::string& kspec, const std::string& case_name,
               const std::string& numeric, const std::string& check, int table_bound,
               Format fmt) {
    Torus kind = torus_from_string(case_name);
    json report;
    report["op"] = "bessel";
    report["inputs"] = {{"n", n}, {"case", case_name}};

    if (!check.empty()) {
        json checks = json::array();
        bool all = true;
        if (check == "lemma42" || check == "recursion") {
            for (const auto& kv : {std::vector<int>{1, 0}, {2, 1}, {1, 1}}) {
                std::vector<int> padded = kv;
                padded.resize(n, 0);
                bool ok = recursion_check(BesselIndex(padded), n);
                all = all && ok;
                checks.push_back({{"name", "recursion"}, {"pass", ok}, {"witness", {{"k", padded}}}});
            }
        } else if (check == "invariance") {
            for (int total = 0; total <= 4; ++total) {
                std::vector<int> kv(n, 0);
                kv[0] = total;
                ScaledValue h = h_value(BesselIndex(kv), n, kind);
                bool ok = is_weyl_invariant(n, h.poly);
                all = all && ok;
                checks.push_back({{"name", "invariance"}, {"pass", ok}, {"witness", {{"k", kv}}}});
            }
        } else if (check == "rank1") {
            VarTablePtr t1 = bessel_table(1, kind);
            for (int k = 0; k <= 6; ++k) {
                bool ok;
                if (kind == Torus::nonsplit) {
                    ok = h_value(BesselIndex({k}), 1, kind).as_rational() ==
                         macdonald_spherical(k, t1, "a1").as_rational();
                } else {
                    std::map<std::string, RationalFn> dict = {
                        {"g1", RationalFn(LaurentPoly::variable(t1, "a1"))},
                        {"g2", RationalFn(LaurentPoly::variable(t1, "a1", -1))},
                        {"t", RationalFn(LaurentPoly::variable(t1, "b"))},
                    };
                    ok = h_value(BesselIndex({k}), 1, kind).as_rational() ==
                         substitute(waldspurger_value(k).as_rational(), dict, t1);
                }
                all = all && ok;
                checks.push_back({{"name", "rank1"}, {"pass", ok}, {"witness", {{"k", k}}}});
            }
        } else {
            throw UsageError("unknown check: " + check);
        }
        report["checks"] = std::move(checks);
        emit_value(fmt, report);
        return all ? 0 : 1;
    }

    if (table_bound >= 0) {
        json rows = json::array();
        std::function<void(std::vector<int>&, int, int)> rec = [&](std::vector<int>& cur,
                                                                   int pos, int left) {
            if (pos == n) {
                ScaledValue h = h_value(BesselIndex(cur), n, kind);
                json row;
                std::ostringstream os;
                for (std::size_t i = 0; i < cur.size(); ++i)
                    os << (i ? " " : "") << cur[i];
                row["index"] = os.str();
                row["scalar"] = h.scalar.str();
                row["value"] = h.poly.str();
                rows.push_back(std::move(row));
                return;
            }
            for (int v = 0; v <= left; ++v) {
                cur[pos] = v;
                rec(cur, pos + 1, left - v);
            }
        };
        std::vector<int> cur(n, 0);
        rec(cur, 0, table_bound);
        report["rows"] = std::move(rows);
        emit_value(fmt, report);
        return 0;
    }

    std::vector<int> kv = parse_int_list(kspec);
    if (static_cast<int>(kv.size()) != n)
        throw UsageError("--k must list exactly n entries");
    BesselIndex idx(kv);
    report["inputs"]["k"] = kv;
    ScaledValue h = h_value(idx, n, kind);
    if (!numeric.empty()) {
        std::vector<std::string> names;
        for (int i = 1; i <= n; ++i)
            names.push_back("a" + std::to_string(i));
        if (kind == Torus::split)
            names.push_back("b");
        SatakeNumeric pt = parse_point(numeric, names);
        report["inputs"]["numeric"] = numeric;
        report["value"] = rational_to_string(eval_at(h, pt));
        report["scalar"] = "1";
    } else {
        report.update(scaled_report(h));
    }
    emit_value(fmt, report);
    return 0;
}

int run_gsp4(int k, int l, const std::string& case_name, const std::string& numeric,
             bool find_dictionary, int table_bound, Format fmt) {
    Torus kind = torus_from_string(case_name);
    json report;
    report["op"] = "gsp4";
    report["inputs"] = {{"k", k}, {"l", l}, {"case", case_name}};

    if (find_dictionary) {
        DictionarySearchOptions opt;
        opt.kind = kind;
        auto matches = find_parameter_dictionary(opt);
        json out = json::array();
        for (const auto& m : matches)
            out.push_back(m.describe());
        report["matches"] = std::move(out);
        emit_value(fmt, report);
        return 0;
    }

    if (table_bound >= 0) {
        json rows = json::array();
        for (int kk = 0; kk <= table_bound; ++kk)
            for (int ll = 0; kk + ll <= table_bound; ++ll) {
                ScaledValue h = h_gsp4(kk, ll, kind);
                json row;
                row["index"] = std::to_string(kk) + " " + std::to_string(ll);
                row["scalar"] = h.scalar.str();
                row["value"] = h.poly.str();
                rows.push_back(std::move(row));
            }
        report["rows"] = std::move(rows);
        emit_value(fmt, report);
        return 0;
    }

    ScaledValue h = h_gsp4(k, l, kind);
    if (!numeric.empty()) {
        std::vector<std::string> names = {"a1", "a2", "a3"};
        if (kind == Torus::split)
            names.push_back("b1");
        SatakeNumeric pt = parse_point(numeric, names);
        report["inputs"]["numeric"] = numeric;
        report["value"] = rational_to_string(eval_at(h, pt));
        report["scalar"] = "1";
    } else {
        report.update(scaled_report(h));
    }
    emit_value(fmt, report);
    return 0;
}

int run_euler(int n, int eta, bool do_verify, Format fmt) {
    json report;
    report["op"] = "euler";
    report["inputs"] = {{"n", n}, {"eta", eta}};
    EulerInput in{n, eta};
    RationalFn factor = l_factor_product(in);
    report["value"] = {{"num", to_json(factor.num())}, {"den", to_json(factor.den())}};
    if (do_verify) {
        bool ok = verify_euler_identity(in);
        report["checks"] =
            json::array({json{{"name", "local-identity"}, {"pass", ok}, {"witness", json::object()}}});
        emit_value(fmt, report);
        return ok ? 0 : 1;
    }
    emit_value(fmt, report);
    return 0;
}

int run_weyl(int n, Format fmt) {
    json report;
    report["op"] = "weyl";
    report["inputs"] = {{"n", n}};
    VarTablePtr t = bessel_table(n, Torus::nonsplit);
    const auto idx_names = [&]() {
        Exponents e(t->size(), 0);
        for (int i = 1; i <= n; ++i)
            e[t->index("a" + std::to_string(i))] = n + 1 - i;
        return e;
    }();
    LaurentPoly staircase = LaurentPoly::monomial(t, idx_names);
    LaurentPoly alt = alternator(n, staircase);
    if (n % 2)
        alt *= Rational(-1);
    LaurentPoly prod = weyl_denominator_product(n, t);
    report["alternant_form"] = to_json(alt);
    report["product_form"] = to_json(prod);
    bool equal = alt == prod;
    report["checks"] = json::array(
        {json{{"name", "weyl-identity"}, {"pass", equal}, {"witness", json::object()}}});
    emit_value(fmt, report);
    return equal ? 0 : 1;
}

int run_verify_cmd(const std::string& suite, int max_n, unsigned long seed, Format fmt) {
    VerifyOptions opt;
    opt.max_n = max_n;
    opt.seed = seed;
    if (suite == "all")
        opt.with_properties = true;
    else if (suite != "acceptance")
        throw UsageError("suite must be all or acceptance");
    auto results = run_verification(opt);
    json report;
    report["op"] = "verify";
    report["inputs"] = {{"suite", suite}, {"max_n", max_n}, {"seed", seed}};
    json checks = json::array();
    bool all = true;
    for (const auto& r : results) {
        all = all && r.pass;
        checks.push_back(
            {{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"witness", r.witness}});
    }
    report["checks"] = std::move(checks);
    emit_value(fmt, report);
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact values of Waldspurger and Bessel models on p-adic groups"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "Output format: json, csv or pretty");

    auto* wald = app.add_subcommand("waldspurger", "GL(2) model values and the integral oracle");
    std::string w_k = "0";
    std::string w_numeric;
    bool w_oracle = false;
    wald->add_option("--k", w_k, "Coset index K or range A..B")->required();
    wald->add_option("--numeric", w_numeric, "Evaluation point q,g1,g2,t");
    wald->add_flag("--oracle", w_oracle, "Also run the exact integration oracle");

    auto* bes = app.add_subcommand("bessel", "Odd orthogonal model values");
    int b_n = 1;
    std::string b_k, b_case = "nonsplit", b_numeric, b_check;
    int b_table = -1;
    bes->add_option("--n", b_n, "Rank")->required();
    bes->add_option("--k", b_k, "Coset index k1,...,kn");
    bes->add_option("--case", b_case, "split or nonsplit")->required();
    bes->add_option("--numeric", b_numeric, "Evaluation point q,a1,...,an[,b]");
    bes->add_option("--check", b_check, "Run a check suite: lemma42, invariance, rank1");
    bes->add_option("--table", b_table, "Emit all indices with sum <= bound");

    auto* gsp = app.add_subcommand("gsp4", "GSp(4) model values");
    int g_k = 0, g_l = 0, g_table = -1;
    std::string g_case = "nonsplit", g_numeric;
    bool g_dict = false;
    gsp->add_option("--k", g_k, "First coset index");
    gsp->add_option("--l", g_l, "Second coset index");
    gsp->add_option("--case", g_case, "split or nonsplit")->required();
    gsp->add_option("--numeric", g_numeric, "Evaluation point q,a1,a2,a3[,b1]");
    gsp->add_flag("--find-dictionary", g_dict, "Search for a parameter dictionary");
    gsp->add_option("--table", g_table, "Emit all (k,l) with k+l <= bound");

    auto* eul = app.add_subcommand("euler", "Local Euler factor and identity check");
    int e_n = 1, e_eta = 1;
    bool e_verify = false;
    eul->add_option("--n", e_n, "Rank")->required();
    eul->add_option("--eta", e_eta, "Quadratic character value: +1 or -1")->required();
    eul->add_flag("--verify", e_verify, "Check the local identity");

    auto* wey = app.add_subcommand("weyl", "Weyl group utilities");
    int y_n = 1;
    wey->add_option("--check-identity", y_n, "Print both sides of the denominator identity")
        ->required();

    auto* ver = app.add_subcommand("verify", "Run the verification suite");
    std::string v_suite = "all";
    int v_max_n = 3;
    unsigned long v_seed = 7;
    ver->add_option("--suite", v_suite, "all or acceptance");
    ver->add_option("--max-n", v_max_n, "Largest rank exercised");
    ver->add_option("--seed", v_seed, "Seed for randomized property checks");

    try {
        app.parse(argc, argv);
        Format fmt = parse_format(format);
        if (wald->parsed())
            return run_waldspurger(w_k, w_numeric, w_oracle, fmt);
        if (bes->parsed())
            return run_bessel(b_n, b_k, b_case, b_numeric, b_check, b_table, fmt);
        if (gsp->parsed())
            return run_gsp4(g_k, g_l, g_case, g_numeric, g_dict, g_table, fmt);
        if (eul->parsed())
            return run_euler(e_n, e_eta, e_verify, fmt);
        if (wey->parsed())
            return run_weyl(y_n, fmt);
        if (ver->parsed())
            return run_verify_cmd(v_suite, v_max_n, v_seed, fmt);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const RegionError& e) {
        std::cerr << "region error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
