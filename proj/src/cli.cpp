#include "pcascade/cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "pcascade/errors.hpp"
#include "pcascade/report.hpp"

namespace pcascade::cli {

namespace {

struct Options {
    std::string family = "A";
    int rank = 0;
    std::string phi;
    std::string chain;
    std::optional<double> tol;
    int grid = 128;
    std::string format = "json";
    std::string out;
    std::string numeric_case;
};

struct Outcome {
    nlohmann::json doc;
    bool passed = true;
};

RestrictedRootSystem system_from(const Options& o) {
    if (o.rank <= 0) throw UsageError("--rank is required and must be positive");
    return build_system({parse_family(o.family), o.rank});
}

Outcome cmd_roots(const Options& o) { return {report::root_system(system_from(o))}; }

Outcome cmd_cascade(const Options& o) {
    const auto sys = system_from(o);
    return {report::cascade(sys, build_cascade(sys))};
}

Outcome cmd_decompose(const Options& o) {
    const auto sys = system_from(o);
    const auto c = build_cascade(sys);
    return {report::decomposition(sys, c, decompose(sys, c, parse_phi(o.phi, o.rank)))};
}

Outcome cmd_verify(const Options& o) {
    const auto sys = system_from(o);
    const auto c = build_cascade(sys);
    const auto d = decompose(sys, c, parse_phi(o.phi, o.rank));
    const auto r = verify_structure(sys, c, d);
    return {report::verification(sys, d, r), r.all_passed()};
}

Outcome cmd_density(const Options& o) {
    const auto sys = system_from(o);
    const auto c = build_cascade(sys);
    const auto d = decompose(sys, c, parse_phi(o.phi, o.rank));
    const auto data = plancherel_data(sys, c, d);
    const auto w = weights(sys, c, d);
    return {report::density(sys, d, data, w), w.ledger_holds() && data.degree_identity_holds()};
}

Outcome cmd_chain(const Options& o) {
    if (o.chain.empty()) throw UsageError("--chain FILE is required");
    std::ifstream in(o.chain);
    if (!in) throw UsageError("cannot open chain file '" + o.chain + "'");
    nlohmann::json parsed;
    try {
        parsed = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw UsageError("chain file '" + o.chain + "' is not valid JSON: " + e.what());
    }
    const auto chain = PropagationChain::from_json(parsed);
    const auto r = check_family(chain);
    auto doc = report::family(chain, r);

    nlohmann::json levels = nlohmann::json::array();
    for (int n : chain.ranks) {
        nlohmann::json level = {{"rank", n}};
        if (r.n_admissible && chain.family != Family::BC) {
            const auto c = inversion_constant(chain, n);
            level["c"] = c ? report::big_int(*c) : nlohmann::json(nullptr);
            const auto lv = build_level(chain, n);
            level["P"] = plancherel_data(lv.system, lv.cascade, lv.decomp).density.to_string();
        }
        levels.push_back(level);
    }
    doc["levels"] = levels;
    return {doc, r.passed()};
}

Outcome cmd_numeric(const Options& o) {
    if (o.numeric_case.empty()) throw UsageError("--case h3|a3 is required");
    const auto which = numeric::parse_inversion_case(o.numeric_case);
    if (o.grid < 8) throw UsageError("--grid must be at least 8");
    numeric::QuadratureConfig cfg;
    cfg.grid = o.grid;
    cfg.tol = o.tol.value_or(which == numeric::InversionCase::h3 ? 1e-4 : 1e-3);
    if (!(cfg.tol > 0)) throw UsageError("--tol must be positive");

    const auto start = std::chrono::steady_clock::now();
    const auto r = numeric::inversion_check(which, {}, {}, cfg);
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    auto doc = report::inversion(which, r);
    doc["runtime_ms"] = ms;
    doc["tol"] = cfg.tol;
    return {doc, r.rel_err <= cfg.tol};
}

Outcome cmd_sweep(const Options& o) {
    if (o.rank > 20) throw UsageError("--rank " + std::to_string(o.rank) + " is too large for a full sweep");
    const auto sys = system_from(o);
    const auto r = sweep(sys.type());
    return {report::sweep(r), r.all_passed()};
}

void emit(const Options& o, const nlohmann::json& doc, std::ostream& out) {
    const std::string text = o.format == "text" ? report::to_plain_text(doc) : report::to_json_text(doc);
    if (o.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(o.out);
    if (!file) throw UsageError("cannot write '" + o.out + "'");
    file << text;
}

}  // namespace

ParabolicSubset parse_phi(const std::string& text, int rank) {
    std::vector<int> idx;
    if (text.empty()) return ParabolicSubset::empty(rank);
    size_t pos = 0;
    while (pos <= text.size()) {
        const size_t comma = std::min(text.find(',', pos), text.size());
        const std::string token = text.substr(pos, comma - pos);
        size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (token.empty() || used != token.size()) throw UsageError("invalid --phi token '" + token + "'");
        if (value < 1 || value > rank)
            throw UsageError("--phi token '" + token + "' is outside 1.." + std::to_string(rank));
        idx.push_back(value);
        pos = comma + 1;
    }
    return ParabolicSubset::from_one_based(rank, idx);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Parabolic cascades, Plancherel densities and their verification", "pcascade"};
    app.require_subcommand(1);
    Options o;

    auto add_system = [&](CLI::App* sub) {
        sub->add_option("--family", o.family, "A, B, C, D or BC")->check(CLI::IsMember({"A", "B", "C", "D", "BC"}));
        sub->add_option("--rank", o.rank, "rank of the root system")->required();
    };
    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--out", o.out, "write the report to PATH");
    };
    auto add_phi = [&](CLI::App* sub) { sub->add_option("--phi", o.phi, "1-based simple roots in Phi, e.g. 1,4,5"); };

    std::map<std::string, Outcome (*)(const Options&)> commands;
    auto add = [&](const std::string& name, const std::string& help, Outcome (*fn)(const Options&)) {
        commands[name] = fn;
        CLI::App* sub = app.add_subcommand(name, help);
        add_output(sub);
        return sub;
    };

    auto* roots = add("roots", "positive roots with multiplicities", cmd_roots);
    add_system(roots);
    auto* casc = add("cascade", "strongly orthogonal cascade and layers", cmd_cascade);
    add_system(casc);
    auto* dec = add("decompose", "grouped layer decomposition of n_Phi", cmd_decompose);
    add_system(dec);
    add_phi(dec);
    auto* ver = add("verify", "structural lemma checks", cmd_verify);
    add_system(ver);
    add_phi(ver);
    auto* den = add("density", "Pfaffians, Plancherel density and weights", cmd_density);
    add_system(den);
    add_phi(den);
    auto* ch = add("chain", "direct-limit family checks", cmd_chain);
    ch->add_option("--chain", o.chain, "chain specification (JSON)")->required();
    auto* num = add("verify-numeric", "Fourier inversion on the A2 or A3 nilradical", cmd_numeric);
    num->add_option("--case", o.numeric_case, "h3 or a3")->required();
    num->add_option("--tol", o.tol, "relative tolerance");
    num->add_option("--grid", o.grid, "coarse grid points per dimension");
    auto* sw = add("sweep", "verify and density over every subset Phi", cmd_sweep);
    add_system(sw);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    try {
        const Outcome result = commands.at(name)(o);
        emit(o, result.doc, out);
        return result.passed ? kExitOk : kExitFailure;
    } catch (const StructureViolation& e) {
        err << e.what() << '\n';
        return kExitFailure;
    } catch (const QuadratureFailure& e) {
        err << e.what() << '\n';
        return kExitFailure;
    } catch (const FamilyViolation& e) {
        err << e.what() << '\n';
        return kExitFailure;
    } catch (const UsageError& e) {
        err << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace pcascade::cli
