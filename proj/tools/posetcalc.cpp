// Command-line front end: parses poset documents and prints the invariants
// computed by the library. Exit codes: 0 success, 1 invalid poset, 2 parse
// error, 3 labeling rejected, 4 internal identity violation.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "posetcalc/posetcalc.hpp"

namespace {

using namespace posetcalc;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(ErrorKind::ParseError, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string subset_str(std::uint64_t mask) {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < 64; ++i) {
        if (!((mask >> i) & 1)) continue;
        if (!first) s += ",";
        s += std::to_string(i);
        first = false;
    }
    return s + "}";
}

std::vector<int> subset_list(std::uint64_t mask) {
    std::vector<int> out;
    for (int i = 0; i < 64; ++i)
        if ((mask >> i) & 1) out.push_back(i);
    return out;
}

template <char Var>
nlohmann::ordered_json poly_json(const DensePoly<Var>& p) {
    return {{"variable", std::string(1, Var)}, {"coefficients", p.coeffs()}};
}

nlohmann::ordered_json ncpoly_json(const NcPoly& f) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::object();
    for (const auto& [w, c] : f.terms())
        terms[w.length() == 0 ? "1" : w.str()] = c.coeffs();
    return {{"degree", f.degree()}, {"terms", terms}};
}

Method method_from_name(const std::string& name) {
    static const std::map<std::string, Method> table = {{"chains", Method::Chains},
                                                        {"omega", Method::Omega},
                                                        {"recursive", Method::Recursive},
                                                        {"beta", Method::Beta}};
    return table.at(name);
}

void emit(const std::string& format, const std::string& text, const nlohmann::ordered_json& obj) {
    if (format == "structured")
        std::cout << obj.dump(2) << "\n";
    else
        std::cout << text << "\n";
}

// Every cross-path identity the library promises, checked on one poset.
std::vector<std::pair<std::string, bool>> verify_checks(const Poset& p) {
    std::vector<std::pair<std::string, bool>> checks;
    auto add = [&](const char* name, bool ok) { checks.emplace_back(name, ok); };
    const int n = p.top_rank();

    YPoly incidence;
    for (int w = 0; w < p.size(); ++w)
        incidence += YPoly::monomial((p.rank(w) % 2) ? -1 : 1, p.rank(w)) *
                     poincare_polynomial(p, w, p.top());
    add("incidence-algebra sum equals 1", incidence == YPoly(1));

    {
        YPoly poin = poincare_polynomial(p);
        TPoly chi = characteristic_polynomial(p);
        bool ok = true;
        for (int k = 0; k <= n; ++k)
            ok = ok && poin.coeff(k) == ((k % 2) ? -chi.coeff(n - k) : chi.coeff(n - k));
        add("poincare matches characteristic polynomial", ok);
    }

    FlagVector alpha = flag_f_vector(p);
    FlagVector beta = flag_h_vector(p);
    {
        bool ok = true;
        for (std::uint64_t s = 0; s < alpha.table_size(); ++s) {
            long long total = 0;
            for (std::uint64_t t = s;; t = (t - 1) & s) {
                total += beta.at(t);
                if (t == 0) break;
            }
            ok = ok && total == alpha.at(s);
        }
        add("flag h-vector inverts to flag f-vector", ok);
    }
    {
        long long total = 0;
        for (std::uint64_t s = 0; s < alpha.table_size(); ++s) total += alpha.at(s);
        add("chain count matches flag f-vector sum",
            total == static_cast<long long>(chains_to_top(p).size()));
    }

    NcPoly expsi = extended_ab_index(p, Method::Chains);
    add("extended ab-index: omega path agrees", expsi == extended_ab_index(p, Method::Omega));
    add("extended ab-index: flag h-vector path agrees", expsi == extended_ab_index(p, Method::Beta));
    add("extended ab-index: sign-expansion path agrees",
        expsi == extended_ab_index_sign_expansion(p));

    NcPoly psi = ab_index(p, Method::Chains);
    add("ab-index: flag h-vector path agrees", psi == ab_index(p, Method::Beta));
    add("ab-index is the y=0 specialization", at_y_zero(expsi) == psi);

    add("gamma expansion reproduces augmented Chow polynomial",
        gamma_expansion(p, true).expanded() == chow_polynomial(p, true));

    if (n >= 1) {
        add("extended ab-index: recursive path agrees",
            expsi == extended_ab_index(p, Method::Recursive));
        add("ab-index: recursive path agrees", psi == ab_index(p, Method::Recursive));

        NcPoly expsi_tilde = extended_ab_index_tilde(p, Method::Chains);
        add("extended tilde: omega path agrees",
            expsi_tilde == extended_ab_index_tilde(p, Method::Omega));
        add("extended tilde: recursive path agrees",
            expsi_tilde == extended_ab_index_tilde(p, Method::Recursive));
        add("extended tilde equals iota of the extended ab-index", expsi_tilde == iota(expsi));

        NcPoly psi_tilde = ab_index_tilde(p, Method::Chains);
        add("tilde ab-index equals iota of the ab-index", psi_tilde == iota(psi));
        add("extended tilde equals (1+y) omega of the tilde ab-index",
            expsi_tilde == YPoly{1, 1} * omega(psi_tilde));
        add("tilde ab-index is the y=0 specialization", at_y_zero(expsi_tilde) == psi_tilde);

        add("iota-omega exchange on the ab-index",
            iota(omega(psi)) == YPoly{1, 1} * omega(iota(psi)));

        add("gamma expansion reproduces Chow polynomial",
            gamma_expansion(p, false).expanded() == chow_polynomial(p, false));
        add("canonical decomposition holds", check_canonical_decomposition(p).ok());
    }
    return checks;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariants of finite graded bounded posets"};
    app.require_subcommand(1);

    std::string input;
    std::string format = "text";
    std::string method = "";
    bool augmented = false;
    bool tilde = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--input", input, "poset document")->required();
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "structured"}));
    };

    auto* cmd_validate = app.add_subcommand("validate", "parse and validate a poset document");
    add_common(cmd_validate);
    auto* cmd_mobius = app.add_subcommand("mobius", "Möbius function from the minimum");
    add_common(cmd_mobius);
    auto* cmd_poincare = app.add_subcommand("poincare", "Poincaré polynomial");
    add_common(cmd_poincare);
    auto* cmd_charpoly = app.add_subcommand("charpoly", "characteristic polynomial");
    add_common(cmd_charpoly);

    auto* cmd_psi = app.add_subcommand("psi", "ab-index");
    add_common(cmd_psi);
    cmd_psi->add_option("--method", method, "computation path")
        ->check(CLI::IsMember({"chains", "beta", "recursive"}));
    cmd_psi->add_flag("--tilde", tilde, "bottom-anchored variant");

    auto* cmd_expsi = app.add_subcommand("expsi", "Poincaré-extended ab-index");
    add_common(cmd_expsi);
    cmd_expsi->add_option("--method", method, "computation path")
        ->check(CLI::IsMember({"chains", "omega", "recursive", "beta"}));
    cmd_expsi->add_flag("--tilde", tilde, "bottom-anchored variant");

    auto* cmd_flag = app.add_subcommand("flag", "flag f- and h-vectors");
    add_common(cmd_flag);

    auto* cmd_chow = app.add_subcommand("chow", "Chow polynomial");
    add_common(cmd_chow);
    cmd_chow->add_flag("--augmented", augmented, "augmented variant");

    auto* cmd_gamma = app.add_subcommand("gamma", "gamma expansion of the Chow polynomial");
    add_common(cmd_gamma);
    cmd_gamma->add_flag("--augmented", augmented, "augmented variant");

    auto* cmd_rlabel_check = app.add_subcommand("rlabel-check", "verify a candidate R-labeling");
    add_common(cmd_rlabel_check);
    auto* cmd_rlabel_expand =
        app.add_subcommand("rlabel-expand", "extended ab-index from an R-labeling");
    add_common(cmd_rlabel_expand);

    auto* cmd_verify = app.add_subcommand("verify", "assert all cross-path identities");
    add_common(cmd_verify);

    CLI11_PARSE(app, argc, argv);

    try {
        ParsedPoset parsed = parse_poset(read_file(input));
        const Poset& p = parsed.poset;

        if (app.got_subcommand(cmd_validate)) {
            std::string label = parsed.document.name.empty() ? "" : " '" + parsed.document.name + "'";
            emit(format,
                 "valid poset" + label + ": rank " + std::to_string(p.top_rank()) + ", " +
                     std::to_string(p.size()) + " elements, " + std::to_string(p.covers().size()) +
                     " covers",
                 {{"name", parsed.document.name},
                  {"rank", p.top_rank()},
                  {"elements", p.size()},
                  {"covers", p.covers().size()}});
        } else if (app.got_subcommand(cmd_mobius)) {
            std::string text;
            nlohmann::ordered_json values = nlohmann::ordered_json::array();
            for (int w = 0; w < p.size(); ++w) {
                long long mu = mobius(p, p.bottom(), w);
                if (w) text += "\n";
                text += "mu(" + p.name(p.bottom()) + ", " + p.name(w) + ") = " + std::to_string(mu);
                values.push_back({{"element", p.name(w)}, {"value", mu}});
            }
            emit(format, text, {{"from", p.name(p.bottom())}, {"values", values}});
        } else if (app.got_subcommand(cmd_poincare)) {
            YPoly poin = poincare_polynomial(p);
            emit(format, to_string(poin), poly_json(poin));
        } else if (app.got_subcommand(cmd_charpoly)) {
            TPoly chi = characteristic_polynomial(p);
            emit(format, to_string(chi), poly_json(chi));
        } else if (app.got_subcommand(cmd_psi)) {
            Method m = method_from_name(method.empty() ? "chains" : method);
            NcPoly f = tilde ? ab_index_tilde(p, m) : ab_index(p, m);
            emit(format, to_string(f), ncpoly_json(f));
        } else if (app.got_subcommand(cmd_expsi)) {
            Method m = method_from_name(method.empty() ? "omega" : method);
            if (tilde && m == Method::Beta) {
                std::cerr << "expsi --tilde supports methods chains, omega, recursive\n";
                return 64;
            }
            NcPoly f = tilde ? extended_ab_index_tilde(p, m) : extended_ab_index(p, m);
            emit(format, to_string(f), ncpoly_json(f));
        } else if (app.got_subcommand(cmd_flag)) {
            FlagVector alpha = flag_f_vector(p);
            FlagVector beta = flag_h_vector(p);
            std::string text;
            nlohmann::ordered_json table = nlohmann::ordered_json::array();
            for (std::uint64_t s = 0; s < alpha.table_size(); ++s) {
                if (s) text += "\n";
                text += "T=" + subset_str(s) + " alpha=" + std::to_string(alpha.at(s)) +
                        " beta=" + std::to_string(beta.at(s));
                table.push_back(
                    {{"set", subset_list(s)}, {"alpha", alpha.at(s)}, {"beta", beta.at(s)}});
            }
            emit(format, text, {{"n", alpha.n}, {"table", table}});
        } else if (app.got_subcommand(cmd_chow)) {
            XPoly h = chow_polynomial(p, augmented);
            emit(format, to_string(h), poly_json(h));
        } else if (app.got_subcommand(cmd_gamma)) {
            GammaExpansion g = gamma_expansion(p, augmented);
            XPoly expanded = g.expanded();
            std::string text;
            nlohmann::ordered_json terms = nlohmann::ordered_json::array();
            for (const auto& t : g.terms) {
                text += "gamma[" + subset_str(t.subset) + "] = " + std::to_string(t.coefficient) + "\n";
                terms.push_back({{"set", subset_list(t.subset)}, {"coefficient", t.coefficient}});
            }
            text += "expansion = " + to_string(expanded) + "\n";
            text += std::string("nonnegative = ") + (g.has_negative_coefficient() ? "false" : "true");
            emit(format, text,
                 {{"n", g.n},
                  {"augmented", g.augmented},
                  {"terms", terms},
                  {"expansion", poly_json(expanded)},
                  {"nonnegative", !g.has_negative_coefficient()}});
        } else if (app.got_subcommand(cmd_rlabel_check) || app.got_subcommand(cmd_rlabel_expand)) {
            if (!parsed.labeling)
                raise(ErrorKind::MissingLabel, "document carries no labels");
            if (app.got_subcommand(cmd_rlabel_check)) {
                RLabelingCheck check = check_r_labeling(p, *parsed.labeling);
                if (check.ok) {
                    emit(format, "R-labeling accepted", {{"accepted", true}});
                } else {
                    std::string text = "R-labeling rejected: interval [" +
                                       p.name(check.witness_bottom) + ", " +
                                       p.name(check.witness_top) + "] has " +
                                       std::to_string(check.rising_chains) +
                                       " weakly rising maximal chains";
                    emit(format, text,
                         {{"accepted", false},
                          {"witness", {p.name(check.witness_bottom), p.name(check.witness_top)}},
                          {"rising_chains", check.rising_chains}});
                    return 3;
                }
            } else {
                NcPoly f = extended_ab_index_from_labeling(p, *parsed.labeling);
                emit(format, to_string(f), ncpoly_json(f));
            }
        } else if (app.got_subcommand(cmd_verify)) {
            auto checks = verify_checks(p);
            bool all_ok = true;
            std::string text;
            nlohmann::ordered_json rows = nlohmann::ordered_json::array();
            for (const auto& [name, ok] : checks) {
                all_ok = all_ok && ok;
                text += std::string(ok ? "ok " : "FAIL ") + name + "\n";
                rows.push_back({{"check", name}, {"ok", ok}});
            }
            text += all_ok ? "verified: all " + std::to_string(checks.size()) + " identities hold"
                           : "FAILED: cross-path identity violated";
            emit(format, text, {{"checks", rows}, {"ok", all_ok}});
            if (!all_ok) return 4;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind()) {
        case ErrorKind::ParseError: return 2;
        case ErrorKind::MissingLabel:
        case ErrorKind::NotAnRLabeling:
        case ErrorKind::NegativeLabel: return 3;
        case ErrorKind::IdentityViolation: return 4;
        default: return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
