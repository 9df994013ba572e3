#include "pcascade/limits.hpp"

#include <algorithm>
#include <set>

#include "pcascade/errors.hpp"

namespace pcascade {

CenteredLabel centered_label(int rank, int i) {
    if (i < 1 || i > rank) throw UsageError("node " + std::to_string(i) + " out of range for rank " + std::to_string(rank));
    int k;
    if (rank % 2) {
        k = i - (rank + 1) / 2;
    } else {
        const int m = rank / 2;
        k = i <= m ? i - m - 1 : i - m;
    }
    return {k > 0 ? 1 : (k < 0 ? -1 : 0), k < 0 ? -k : k};
}

int from_centered(int rank, int k) {
    for (int i = 1; i <= rank; ++i)
        if (centered_label(rank, i).signed_index() == k) return i;
    throw UsageError("centered label " + std::to_string(k) + " does not exist in rank " + std::to_string(rank));
}

std::vector<int> simple_embedding(const RootSystemType& n, const RootSystemType& l) {
    if (n.family != l.family)
        throw IncompatibleFamily(std::string(family_name(n.family)) + " does not embed in " + std::string(family_name(l.family)));
    if (n.rank > l.rank) throw IncompatibleFamily("rank " + std::to_string(n.rank) + " exceeds " + std::to_string(l.rank));
    int shift = 0;
    if (n.family == Family::A) {
        if ((l.rank - n.rank) % 2)
            throw IncompatibleFamily("A_" + std::to_string(n.rank) + " and A_" + std::to_string(l.rank) +
                                     " differ in rank parity; the centered propagation adds nodes in pairs");
        shift = (l.rank - n.rank) / 2;
    }
    std::vector<int> map(static_cast<size_t>(n.rank));
    for (int i = 0; i < n.rank; ++i) map[static_cast<size_t>(i)] = i + shift;
    return map;
}

Coords embed_coords(const std::vector<int>& simple_map, int target_rank, const Coords& c) {
    Coords out(static_cast<size_t>(target_rank), 0);
    for (size_t i = 0; i < c.size(); ++i) out[static_cast<size_t>(simple_map[i])] = c[i];
    return out;
}

std::vector<RootId> propagate(const RestrictedRootSystem& small, const RestrictedRootSystem& large) {
    const auto map = simple_embedding(small.type(), large.type());
    std::vector<RootId> out;
    for (RootId a = 0; a < small.size(); ++a) out.push_back(large.id_of(embed_coords(map, large.rank(), small.coords(a))));
    return out;
}

PropagationChain PropagationChain::from_json(const nlohmann::json& j) {
    PropagationChain c;
    try {
        c.family = parse_family(j.at("family").get<std::string>());
        c.ranks = j.at("ranks").get<std::vector<int>>();
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("malformed chain file: ") + e.what());
    }
    if (c.ranks.empty()) throw UsageError("chain has no ranks");
    for (size_t i = 1; i < c.ranks.size(); ++i)
        if (c.ranks[i] <= c.ranks[i - 1]) throw UsageError("chain ranks must increase");
    const std::string labels = j.value("phi_labels", std::string("internal"));
    if (labels != "internal" && labels != "centered") throw UsageError("phi_labels must be internal or centered");
    if (labels == "centered" && c.family != Family::A) throw UsageError("centered labels apply to family A only");
    if (!j.contains("phi")) return c;
    const auto& phi = j.at("phi");
    if (!phi.is_object()) throw UsageError("phi must map ranks to index lists");
    for (int r : c.ranks) {
        const std::string key = std::to_string(r);
        if (!phi.contains(key)) throw UsageError("phi has no entry for rank " + key);
        std::vector<int> idx;
        try {
            idx = phi.at(key).get<std::vector<int>>();
        } catch (const nlohmann::json::exception&) {
            throw UsageError("phi entry for rank " + key + " is not an integer list");
        }
        if (labels == "centered")
            for (int& i : idx) i = from_centered(r, i);
        for (int i : idx)
            if (i < 1 || i > r) throw UsageError("index " + std::to_string(i) + " out of range for rank " + key);
        c.phis[r] = ParabolicSubset::from_one_based(r, idx);
    }
    for (const auto& [k, v] : phi.items())
        if (std::find(c.ranks.begin(), c.ranks.end(), std::atoi(k.c_str())) == c.ranks.end())
            throw UsageError("phi entry '" + k + "' is not a rank of the chain");
    return c;
}

ChainLevel build_level(const PropagationChain& chain, int rank) {
    ChainLevel lv;
    lv.rank = rank;
    lv.system = build_system({chain.family, rank});
    lv.cascade = build_cascade(lv.system);
    auto it = chain.phis.find(rank);
    lv.decomp = decompose(lv.system, lv.cascade, it == chain.phis.end() ? ParabolicSubset::empty(rank) : it->second);
    const int m = lv.cascade.size();
    for (int t = 0; t < m; ++t) lv.part2.push_back(m - 1 - t);
    for (const auto& g : lv.decomp.groups) {
        std::vector<int> idx;
        for (int r : g.I) idx.push_back(m - r);
        std::sort(idx.begin(), idx.end());
        lv.groups.push_back(std::move(idx));
    }
    std::sort(lv.groups.begin(), lv.groups.end());
    return lv;
}

void FamilyReport::enforce() const {
    if (violations.empty()) return;
    const auto& v = violations.front();
    throw FamilyViolation(v.level, v.kind, v.witness);
}

FamilyReport check_family(const PropagationChain& chain) {
    if (!chain.has_phis()) throw UsageError("check_family needs a parabolic subset for every rank");
    FamilyReport rep;
    std::vector<ChainLevel> levels;
    for (int r : chain.ranks) levels.push_back(build_level(chain, r));
    rep.n_empty = std::all_of(levels.begin(), levels.end(),
                              [](const ChainLevel& lv) { return lv.decomp.phi.complement().empty(); });
    for (const auto& lv : levels) rep.groups_by_rank[lv.rank] = lv.groups;

    auto record = [&](int level, const std::string& kind, const std::string& witness) {
        rep.violations.push_back({level, kind, witness});
    };
    for (size_t s = 0; s + 1 < levels.size(); ++s) {
        const ChainLevel& a = levels[s];
        const ChainLevel& b = levels[s + 1];
        const auto map = simple_embedding(a.system.type(), b.system.type());
        const auto& pa = a.decomp.phi;
        const auto& pb = b.decomp.phi;
        bool n_ok = true;
        for (int i = 0; i < a.rank; ++i) {
            const int img = map[static_cast<size_t>(i)];
            if (!pa.contains(i) && pb.contains(img)) {
                n_ok = false;
                record(b.rank, "N", "psi_" + std::to_string(i + 1) + " leaves the complement");
            }
            if (pa.contains(i) && !pb.contains(img)) {
                rep.u_admissible = false;
                record(b.rank, "U", "psi_" + std::to_string(i + 1) + " leaves Phi");
            }
        }
        rep.n_admissible = rep.n_admissible && n_ok;

        const std::vector<RootId> iota = propagate(a.system, b.system);
        bool nested = a.cascade.size() <= b.cascade.size();
        for (size_t t = 0; nested && t < a.part2.size(); ++t) {
            RootId mapped = iota[static_cast<size_t>(a.cascade.betas[static_cast<size_t>(a.part2[t])])];
            if (mapped != b.cascade.betas[static_cast<size_t>(b.part2[t])]) {
                nested = false;
                record(b.rank, "cascade", "Part-II beta_" + std::to_string(t + 1) + " " +
                                              coords_to_string(b.system.coords(mapped)) + " is not a prefix entry");
            }
        }
        rep.cascade_nesting = rep.cascade_nesting && nested;

        if (nested) {
            for (size_t k = 0; k < a.groups.size(); ++k) {
                const auto& small = a.groups[k];
                bool ok = k < b.groups.size() &&
                          std::includes(b.groups[k].begin(), b.groups[k].end(), small.begin(), small.end());
                if (!ok) {
                    rep.groups_nest = false;
                    record(b.rank, "groups", "I_" + std::to_string(k + 1) + " of rank " + std::to_string(a.rank));
                }
            }
        }

        if (n_ok) {
            for (RootId alpha : a.decomp.split.nil) {
                const auto small = root_class(a.system, pa, alpha);
                auto big = root_class(b.system, pb, iota[static_cast<size_t>(alpha)]);
                std::sort(big.begin(), big.end());
                for (RootId x : small)
                    if (!std::binary_search(big.begin(), big.end(), iota[static_cast<size_t>(x)])) {
                        rep.classes_nest = false;
                        record(b.rank, "class", coords_to_string(a.system.coords(x)));
                        break;
                    }
            }
        }
    }
    rep.e_admissible = rep.n_admissible && rep.u_admissible;

    for (const auto& lv : levels)
        for (size_t k = 0; k < lv.groups.size(); ++k) {
            if (rep.i_infinity.size() <= k) rep.i_infinity.resize(k + 1);
            auto& acc = rep.i_infinity[k];
            std::vector<int> merged;
            std::set_union(acc.begin(), acc.end(), lv.groups[k].begin(), lv.groups[k].end(), std::back_inserter(merged));
            acc = std::move(merged);
        }
    return rep;
}

namespace {

void require_rank(const PropagationChain& chain, int r) {
    if (std::find(chain.ranks.begin(), chain.ranks.end(), r) == chain.ranks.end())
        throw UsageError("rank " + std::to_string(r) + " is not part of the chain");
}

Rational abs_value(Rational q) { return q < 0 ? Rational(-q) : q; }

}  // namespace

std::vector<std::string> density_variables(const PropagationChain& chain, int l) {
    require_rank(chain, l);
    ChainLevel lv = build_level(chain, l);
    return plancherel_data(lv.system, lv.cascade, lv.decomp).variables;
}

std::vector<Rational> restrict_parameter(const PropagationChain& chain, int n, int l,
                                         const std::vector<Rational>& gamma_l) {
    require_rank(chain, n);
    require_rank(chain, l);
    if (n > l) throw UsageError("restriction runs from the larger rank to the smaller");
    ChainLevel a = build_level(chain, n);
    ChainLevel b = build_level(chain, l);
    PlancherelData pa = plancherel_data(a.system, a.cascade, a.decomp);
    PlancherelData pb = plancherel_data(b.system, b.cascade, b.decomp);
    if (gamma_l.size() != pb.variables.size())
        throw ArityError("gamma has " + std::to_string(gamma_l.size()) + " entries, level " + std::to_string(l) +
                         " has " + std::to_string(pb.variables.size()) + " variables");

    const std::vector<RootId> iota = propagate(a.system, b.system);
    std::vector<Rational> gamma_n;
    for (RootId z : pa.variable_roots) {
        RootId img = iota[static_cast<size_t>(z)];
        auto it = std::find(pb.variable_roots.begin(), pb.variable_roots.end(), img);
        if (it == pb.variable_roots.end())
            throw FamilyViolation(l, "z", coords_to_string(b.system.coords(img)) + " is not central at rank " + std::to_string(l));
        gamma_n.push_back(gamma_l[static_cast<size_t>(it - pb.variable_roots.begin())]);
    }
    return gamma_n;
}

Rational renormalization_ratio(const PropagationChain& chain, int n, int l, const std::vector<Rational>& gamma_l) {
    const std::vector<Rational> gamma_n = restrict_parameter(chain, n, l, gamma_l);
    ChainLevel a = build_level(chain, n);
    ChainLevel b = build_level(chain, l);
    const Rational denom = abs_value(evaluate(plancherel_data(b.system, b.cascade, b.decomp).density, gamma_l));
    if (denom == 0) throw SingularParameter("P_" + std::to_string(l) + " vanishes at gamma");
    return abs_value(evaluate(plancherel_data(a.system, a.cascade, a.decomp).density, gamma_n)) / denom;
}

std::optional<BigInt> inversion_constant(const PropagationChain& chain, int n) {
    require_rank(chain, n);
    return stepwise_constant(build_level(chain, n).decomp);
}

}  // namespace pcascade
