#include "pcascade/report.hpp"

#include <limits>
#include <sstream>

namespace pcascade::report {

namespace {

json coords_list(const RestrictedRootSystem& sys, const std::vector<RootId>& ids) {
    json out = json::array();
    for (RootId id : ids) out.push_back(sys.coords(id));
    return out;
}

std::vector<int> one_based(const std::vector<int>& zero_based) {
    std::vector<int> out;
    for (int i : zero_based) out.push_back(i + 1);
    return out;
}

json header(const RestrictedRootSystem& sys) {
    return {{"family", std::string(family_name(sys.type().family))}, {"rank", sys.rank()}};
}

json lemma(const LemmaResult& l) {
    json witness = json::array();
    for (const auto& c : l.witness) witness.push_back(c);
    return {{"name", l.name}, {"passed", l.passed}, {"witness", witness}, {"detail", l.detail}};
}

void flatten(const json& node, const std::string& path, std::ostringstream& out) {
    if (node.is_object()) {
        for (const auto& [k, v] : node.items()) flatten(v, path.empty() ? k : path + "." + k, out);
    } else if (node.is_array() && !node.empty() && node.front().is_object()) {
        for (size_t i = 0; i < node.size(); ++i) flatten(node[i], path + "[" + std::to_string(i) + "]", out);
    } else {
        out << path << ": " << (node.is_string() ? node.get<std::string>() : node.dump()) << '\n';
    }
}

}  // namespace

json big_int(const BigInt& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return v.convert_to<long long>();
    return v.str();
}

json root_system(const RestrictedRootSystem& sys) {
    json doc = header(sys);
    json simple = json::array();
    for (const auto& r : sys.simple()) simple.push_back(r.simple_coords);
    json positive = json::array();
    for (RootId a = 0; a < sys.size(); ++a)
        positive.push_back({{"coords", sys.coords(a)},
                            {"ambient", sys.root(a).ambient},
                            {"mult", sys.mult(a)},
                            {"nonmultipliable", sys.nonmultipliable(a)}});
    doc["simple"] = simple;
    doc["positive"] = positive;
    return doc;
}

json cascade(const RestrictedRootSystem& sys, const Cascade& c) {
    json doc = header(sys);
    doc["betas"] = coords_list(sys, c.betas);
    json layers = json::array(), sigma = json::array(), heis = json::array();
    for (int r = 0; r < c.size(); ++r) {
        const auto& layer = c.layers[static_cast<size_t>(r)];
        layers.push_back(coords_list(sys, layer));
        json pairs = json::array();
        for (size_t k = 0; k < layer.size(); ++k)
            if (layer[k] < c.sigma[static_cast<size_t>(r)][k])
                pairs.push_back({sys.coords(layer[k]), sys.coords(c.sigma[static_cast<size_t>(r)][k])});
        sigma.push_back(pairs);
        heis.push_back(heisenberg_check(sys, c, r));
    }
    doc["layers"] = layers;
    doc["sigma_pairs"] = sigma;
    doc["heisenberg"] = heis;
    return doc;
}

json decomposition(const RestrictedRootSystem& sys, const Cascade& c, const PhiDecomposition& d) {
    json doc = header(sys);
    doc["phi"] = d.phi.one_based();
    doc["phi_nil"] = coords_list(sys, d.split.nil);
    doc["phi_red"] = coords_list(sys, d.split.red_positive);
    json layers = json::array();
    for (const auto& l : d.surviving)
        layers.push_back({{"r", l.r + 1},
                          {"beta", sys.coords(c.betas[static_cast<size_t>(l.r)])},
                          {"J", coords_list(sys, l.J)},
                          {"J_prime", coords_list(sys, l.J_prime)},
                          {"J_double", coords_list(sys, l.J_double)}});
    doc["layers"] = layers;

    const InvarianceReport inv = invariance_class(sys, c, d);
    json groups = json::array();
    for (size_t j = 0; j < d.groups.size(); ++j) {
        const auto& g = d.groups[j];
        groups.push_back({{"j", j + 1},
                          {"I", one_based(g.I)},
                          {"z", coords_list(sys, g.z)},
                          {"v", coords_list(sys, g.v)},
                          {"l", coords_list(sys, g.l)},
                          {"l_double", coords_list(sys, g.l_double)},
                          {"restriction", g.restriction},
                          {"dims", {{"l", g.dim_l}, {"z", g.dim_z}, {"v", g.dim_v}}},
                          {"invariant", inv.per_group[j] == Invariance::invariant},
                          // weak invariance depends on group orbits, which the root data cannot see
                          {"invariance", inv.per_group[j] == Invariance::invariant ? "invariant" : "undetermined-weak"},
                          {"class", coords_list(sys, inv.group_classes[j])}});
    }
    doc["groups"] = groups;
    doc["dim_n"] = d.dim_n;
    doc["dim_s"] = d.dim_s;
    return doc;
}

json verification(const RestrictedRootSystem& sys, const PhiDecomposition& d, const VerificationReport& r) {
    json doc = header(sys);
    doc["phi"] = d.phi.one_based();
    doc["passed"] = r.all_passed();
    json lemmas = json::array();
    for (const auto& l : r.lemmas) lemmas.push_back(lemma(l));
    doc["lemmas"] = lemmas;
    return doc;
}

json polynomial(const Polynomial& p) {
    json terms = json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        terms.push_back({{"exponents", it->first}, {"coeff", big_int(it->second)}});
    return {{"text", p.to_string()}, {"variables", p.variables()}, {"terms", terms}};
}

json weights(const WeightLedger& w) {
    return {{"delta", w.delta_weight.to_strings()},
            {"p", w.p_weight.to_strings()},
            {"det", w.det_weight.to_strings()},
            {"trace", w.trace_weight.to_strings()},
            {"ledger_holds", w.ledger_holds()}};
}

json density(const RestrictedRootSystem& sys, const PhiDecomposition& d, const PlancherelData& data,
             const WeightLedger& w) {
    json doc = header(sys);
    doc["phi"] = d.phi.one_based();
    json groups = json::array();
    for (const auto& g : data.per_group) groups.push_back({{"j", g.j + 1}, {"d", g.d}, {"pf", g.pf.to_string()}});
    doc["groups"] = groups;
    doc["variables"] = data.variables;
    doc["P"] = data.density.to_string();
    doc["P_terms"] = polynomial(data.density)["terms"];
    doc["Det"] = data.det_sphi.to_string();
    doc["c"] = data.c_const ? big_int(*data.c_const) : json(nullptr);
    doc["weights"] = weights(w);
    doc["aprime_dim"] = w.aprime_dim;
    doc["degrees"] = {{"P", data.deg_P}, {"Det", data.deg_det}, {"half_dim_sum", data.half_dim_sum.str()}};
    doc["degree_identity"] = data.degree_identity_holds();
    return doc;
}

json family(const PropagationChain& chain, const FamilyReport& r) {
    json doc = {{"family", std::string(family_name(chain.family))}, {"ranks", chain.ranks}};
    doc["admissible"] = {{"N", r.n_admissible}, {"A", r.a_admissible}, {"U", r.u_admissible}, {"E", r.e_admissible}};
    doc["n_empty"] = r.n_empty;
    doc["cascade_nesting"] = r.cascade_nesting;
    doc["groups_nest"] = r.groups_nest;
    doc["classes_nest"] = r.classes_nest;
    json by_rank = json::object();
    for (const auto& [n, g] : r.groups_by_rank) by_rank[std::to_string(n)] = g;
    doc["groups_by_rank"] = by_rank;
    doc["i_infinity"] = r.i_infinity;
    json violations = json::array();
    for (const auto& v : r.violations) violations.push_back({{"level", v.level}, {"kind", v.kind}, {"witness", v.witness}});
    doc["violations"] = violations;
    doc["passed"] = r.passed();
    return doc;
}

json sweep(const SweepResult& r) {
    json doc = {{"family", std::string(family_name(r.type.family))}, {"rank", r.type.rank}};
    json cases = json::array();
    for (const auto& c : r.cases) {
        json failed = json::array();
        for (const auto& l : c.lemma_failures) failed.push_back(lemma(l));
        json entry = {{"phi", c.phi.one_based()},
                      {"passed", c.passed()},
                      {"groups", c.groups},
                      {"non_invariant_groups", c.non_invariant_groups},
                      {"lemma_failures", failed},
                      {"ledger_holds", c.ledger_holds},
                      {"density_computed", c.density_computed},
                      {"degree_identity", c.degree_identity},
                      {"easy_tilde", c.easy_tilde},
                      {"pfaffians_nonzero", c.pfaffians_nonzero}};
        if (!c.error.empty()) entry["error"] = c.error;
        cases.push_back(entry);
    }
    doc["subsets"] = r.cases.size();
    doc["failures"] = r.failures();
    doc["passed"] = r.all_passed();
    doc["cases"] = cases;
    return doc;
}

json norm_check(const numeric::NormCheck& r) {
    return {{"numeric", r.numeric},
            {"predicted", r.predicted},
            {"rel_err", r.rel_err},
            {"refinement_diff", r.refinement_diff},
            {"grid", r.grid}};
}

json inversion(numeric::InversionCase which, const numeric::InversionResult& r) {
    return {{"case", numeric::case_name(which)},
            {"lhs", r.lhs},
            {"rhs", r.rhs},
            {"rhs_imag", r.rhs_imag},
            {"rel_err", r.rel_err},
            {"refinement_diff", r.refinement_diff},
            {"grid", r.grid},
            {"c", r.c},
            {"coordinates", r.coordinates}};
}

std::string to_json_text(const json& doc) { return doc.dump(2) + "\n"; }

std::string to_plain_text(const json& doc) {
    std::ostringstream out;
    flatten(doc, "", out);
    return out.str();
}

}  // namespace pcascade::report
