// qferm: load a quiver, run computations and identity sweeps, emit
// machine-readable reports.  Exit codes: 0 computed/verified, 1 mismatch,
// 2 usage or input error.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <qferm/checks.hpp>
#include <qferm/oracle.hpp>

namespace {

std::vector<int> parse_ints(const std::string& s, const char* what) {
    std::vector<int> out;
    size_t pos = 0;
    while (true) {
        size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
        try {
            size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw qferm::error(std::string(what) + ": expected comma-separated integers, got '" +
                               s + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

nlohmann::json report_json(const qferm::VerificationReport& rep) {
    nlohmann::json params;
    params["quiver_hash"] = rep.quiver_hash;
    params["nu"] = rep.nu;
    params["box"] = rep.box;
    for (const auto& [k, v] : rep.extra) params[k] = v;
    nlohmann::json out;
    out["identity"] = rep.identity;
    out["params"] = params;
    out["status"] = qferm::to_string(rep.status);
    out["mismatches"] = nlohmann::json::array();
    for (const auto& m : rep.mismatches)
        out["mismatches"].push_back({{"alpha", m.alpha}, {"lhs", m.lhs}, {"rhs", m.rhs}});
    out["ms"] = rep.ms;
    return out;
}

int finish(const qferm::VerificationReport& rep) {
    std::cout << report_json(rep).dump(2) << "\n";
    return rep.ok() ? 0 : 1;
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

// Coefficient tables: CSV rows with the degree quoted, or a JSON row list.
void emit_table(const std::string& name, std::uint64_t quiver_hash,
                const std::vector<std::pair<std::vector<int>, std::string>>& rows,
                const std::string& format) {
    if (format == "json") {
        nlohmann::json out;
        out["identity"] = name;
        out["params"] = {{"quiver_hash", quiver_hash}};
        out["rows"] = nlohmann::json::array();
        for (const auto& [alpha, value] : rows)
            out["rows"].push_back({{"alpha", alpha}, {"value", value}});
        std::cout << out.dump(2) << "\n";
        return;
    }
    std::cout << "alpha,value\n";
    for (const auto& [alpha, value] : rows)
        std::cout << "\"" << join(alpha) << "\"," << value << "\n";
}

struct Opts {
    std::string quiver, nu, box, beta, lambda, dim;
    std::string kind = "m", format = "csv";
    int prime = 2, nu_scale = 1;
    bool typo = false;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-series computations for quiver weight spaces"};
    app.require_subcommand(1);
    Opts o;
    int code = 0;

    auto add_quiver = [&](CLI::App* sub) {
        sub->add_option("--quiver", o.quiver, "quiver JSON file")->required();
    };
    auto load = [&] { return qferm::RootData(qferm::Quiver::from_file(o.quiver)); };
    auto nu_vec = [&] { return parse_ints(o.nu, "--nu"); };
    auto box_vec = [&] { return parse_ints(o.box, "--box"); };

    CLI::App* compute = app.add_subcommand("compute", "evaluate tables and single values");
    compute->require_subcommand(1);

    CLI::App* kac = compute->add_subcommand("kac", "absolutely indecomposable counts a_alpha");
    add_quiver(kac);
    kac->add_option("--box", o.box, "componentwise degree bound")->required();
    kac->add_option("--format", o.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    kac->add_flag("--paper-typo-bracket", o.typo)->group("");
    kac->callback([&] {
        qferm::RootData rd = load();
        qferm::KacTable t = qferm::kac_a_series(rd, qferm::xbox(box_vec()), o.typo);
        std::vector<std::pair<std::vector<int>, std::string>> rows;
        for (const auto& [alpha, value] : t.a) rows.emplace_back(alpha, value.str());
        emit_table("kac-table", rd.quiver().hash(), rows, o.format);
    });

    CLI::App* ferm = compute->add_subcommand("fermionic", "one fermionic form value");
    add_quiver(ferm);
    ferm->add_option("--nu", o.nu, "weight, comma-separated")->required();
    CLI::Option* ob = ferm->add_option("--beta", o.beta, "root coordinates");
    CLI::Option* ol = ferm->add_option("--lambda", o.lambda, "target weight");
    ob->excludes(ol);
    ferm->add_option("--kind", o.kind, "m (dominant-restricted) or n")
        ->check(CLI::IsMember({"m", "n"}));
    ferm->callback([&] {
        qferm::RootData rd = load();
        std::vector<int> nu = nu_vec();
        std::vector<int> beta;
        if (!o.beta.empty())
            beta = parse_ints(o.beta, "--beta");
        else if (!o.lambda.empty())
            beta = qferm::beta_from_lambda(rd, nu, parse_ints(o.lambda, "--lambda"));
        else
            throw qferm::error("fermionic: need --beta or --lambda");
        qferm::RatQ v = o.kind == "m" ? qferm::fermionic_m(rd, nu, beta)
                                      : qferm::fermionic_n(rd, nu, beta);
        std::cout << v.str() << "\n";
    });

    CLI::App* hausel = compute->add_subcommand("hausel", "normalized weight-space series");
    add_quiver(hausel);
    hausel->add_option("--nu", o.nu, "dominant weight")->required();
    hausel->add_option("--box", o.box, "componentwise degree bound")->required();
    hausel->add_option("--format", o.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    hausel->callback([&] {
        qferm::RootData rd = load();
        std::vector<int> nu = nu_vec();
        qferm::Box box = qferm::xbox(box_vec());
        std::vector<std::pair<std::vector<int>, std::string>> rows;
        for (const qferm::Degree& d : box.all_degrees()) {
            qferm::PoincareEntry e = qferm::poincare_polynomial(rd, d.x, nu, box);
            rows.emplace_back(e.alpha, e.poly.str());
        }
        emit_table("hausel-table", rd.quiver().hash(), rows, o.format);
    });

    CLI::App* verify = app.add_subcommand("verify", "identity sweeps with a report");
    verify->require_subcommand(1);

    auto add_verify = [&](const char* name, const char* help, auto run, bool with_nu = true) {
        CLI::App* sub = verify->add_subcommand(name, help);
        add_quiver(sub);
        if (with_nu) sub->add_option("--nu", o.nu, "weight, comma-separated")->required();
        sub->add_option("--box", o.box, "componentwise degree bound")->required();
        sub->callback([&, run] { code = finish(run()); });
        return sub;
    };

    add_verify("main-identity", "weight-space series against the Hua quotient",
               [&] { return qferm::main_identity_check(load(), nu_vec(), box_vec()); });
    add_verify("kleber", "column recursion against direct enumeration",
               [&] { return qferm::kleber_check(load(), nu_vec(), box_vec()); });
    add_verify("verma", "character expansion over positive roots",
               [&] { return qferm::verma_expansion_check(load(), nu_vec(), box_vec()); });
    add_verify("weyl", "sign rule under the dot action",
               [&] { return qferm::weyl_antisymmetry_check(load(), nu_vec(), box_vec()); });
    CLI::App* star =
        add_verify("star", "framed-quiver Kac table against the ratio series",
                   [&] { return qferm::star_consistency(load(), nu_vec(), box_vec(), o.typo); });
    star->add_flag("--paper-typo-bracket", o.typo)->group("");
    CLI::App* kc =
        add_verify("kac-conjecture", "degenerate limit of the count table at q = 0",
                   [&] { return qferm::kac_conjecture_check(load(), box_vec(), o.nu_scale); },
                   false);
    kc->add_option("--nu-scale", o.nu_scale, "weight multiple of (1,..,1)")->required();

    CLI::App* oracle = app.add_subcommand("oracle", "finite-field brute force");
    oracle->require_subcommand(1);
    CLI::App* count = oracle->add_subcommand("count", "isomorphism classes over F_p");
    add_quiver(count);
    count->add_option("--dim", o.dim, "dimension vector")->required();
    count->add_option("--prime", o.prime, "2, 3 or 5")->required();
    count->callback([&] {
        qferm::RootData rd = load();
        std::cout << qferm::burnside_iso_classes(rd.quiver(), parse_ints(o.dim, "--dim"),
                                                 o.prime)
                  << "\n";
    });

    CLI::App* probe = app.add_subcommand("probe", "exploratory tabulations");
    probe->require_subcommand(1);
    CLI::App* mn = probe->add_subcommand("mn", "dominant-restricted form against the free one");
    add_quiver(mn);
    mn->add_option("--nu", o.nu, "dominant weight")->required();
    mn->add_option("--box", o.box, "componentwise degree bound")->required();
    mn->callback([&] { code = finish(qferm::mn_conjecture_probe(load(), nu_vec(), box_vec())); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.get_name() << ": " << e.what() << "\n";
        return 2;
    } catch (const qferm::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return code;
}
