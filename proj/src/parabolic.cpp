#include "pcascade/parabolic.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "pcascade/errors.hpp"

namespace pcascade {

ParabolicSubset::ParabolicSubset(int rank, std::vector<int> zero_based)
    : rank_(rank), phi_(std::move(zero_based)), in_phi_(static_cast<size_t>(rank), false) {
    std::sort(phi_.begin(), phi_.end());
    phi_.erase(std::unique(phi_.begin(), phi_.end()), phi_.end());
    for (int i : phi_) {
        if (i < 0 || i >= rank) throw UsageError("simple root index " + std::to_string(i + 1) + " out of range");
        in_phi_[static_cast<size_t>(i)] = true;
    }
    for (int i = 0; i < rank; ++i)
        if (!in_phi_[static_cast<size_t>(i)]) complement_.push_back(i);
}

ParabolicSubset ParabolicSubset::from_one_based(int rank, const std::vector<int>& one_based) {
    std::vector<int> z;
    for (int i : one_based) z.push_back(i - 1);
    return {rank, std::move(z)};
}

ParabolicSubset ParabolicSubset::full(int rank) {
    std::vector<int> all(static_cast<size_t>(rank));
    std::iota(all.begin(), all.end(), 0);
    return {rank, std::move(all)};
}

ParabolicSubset ParabolicSubset::from_mask(int rank, unsigned mask) {
    std::vector<int> z;
    for (int i = 0; i < rank; ++i)
        if (mask & (1u << i)) z.push_back(i);
    return {rank, std::move(z)};
}

std::vector<int> ParabolicSubset::one_based() const {
    std::vector<int> out;
    for (int i : phi_) out.push_back(i + 1);
    return out;
}

bool RestrictedWeight::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& q) { return q == 0; });
}

RestrictedWeight& RestrictedWeight::operator+=(const RestrictedWeight& o) {
    if (coeffs.empty()) coeffs.assign(o.coeffs.size(), Rational(0));
    if (o.coeffs.size() != coeffs.size()) throw ArityError("restricted weights of different length");
    for (size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
    return *this;
}

RestrictedWeight operator*(const Rational& s, RestrictedWeight w) {
    for (auto& c : w.coeffs) c *= s;
    return w;
}

std::vector<std::string> RestrictedWeight::to_strings() const {
    std::vector<std::string> out;
    for (const auto& c : coeffs) out.push_back(c.str());
    return out;
}

std::vector<int> restrict_coords(const Coords& alpha, const ParabolicSubset& phi) {
    std::vector<int> out;
    for (int i : phi.complement()) out.push_back(alpha[static_cast<size_t>(i)]);
    return out;
}

RestrictedWeight restrict_root(const Coords& alpha, const ParabolicSubset& phi) {
    RestrictedWeight w;
    for (int i : phi.complement()) w.coeffs.emplace_back(alpha[static_cast<size_t>(i)]);
    return w;
}

PhiSplit phi_split(const RestrictedRootSystem& sys, const ParabolicSubset& phi) {
    PhiSplit out;
    for (RootId a = 0; a < sys.size(); ++a) {
        bool outside = false;
        for (int i : phi.complement())
            if (sys.coords(a)[static_cast<size_t>(i)] > 0) outside = true;
        (outside ? out.nil : out.red_positive).push_back(a);
    }
    return out;
}

const SurvivingLayer* PhiDecomposition::layer(int r) const {
    for (const auto& s : surviving)
        if (s.r == r) return &s;
    return nullptr;
}

PhiDecomposition decompose(const RestrictedRootSystem& sys, const Cascade& c, const ParabolicSubset& phi) {
    if (phi.rank() != sys.rank()) throw ArityError("parabolic subset rank does not match the system");
    PhiDecomposition d;
    d.phi = phi;
    d.split = phi_split(sys, phi);
    std::vector<bool> nil(static_cast<size_t>(sys.size()), false);
    for (RootId a : d.split.nil) nil[static_cast<size_t>(a)] = true;

    for (int r = 0; r < c.size(); ++r) {
        if (!nil[static_cast<size_t>(c.betas[static_cast<size_t>(r)])]) continue;
        SurvivingLayer s;
        s.r = r;
        const auto& layer = c.layers[static_cast<size_t>(r)];
        for (RootId a : layer)
            if (nil[static_cast<size_t>(a)]) s.J.push_back(a);
        for (size_t k = 0; k < layer.size(); ++k) {
            RootId a = layer[k];
            if (!nil[static_cast<size_t>(a)]) continue;
            RootId partner = c.sigma[static_cast<size_t>(r)][k];
            (nil[static_cast<size_t>(partner)] ? s.J_prime : s.J_double).push_back(a);
        }
        d.surviving.push_back(std::move(s));
    }

    std::vector<bool> grouped(static_cast<size_t>(c.size()), false);
    for (int q = 0; q < c.size(); ++q) {
        if (grouped[static_cast<size_t>(q)]) continue;
        const auto rq = restrict_coords(sys.coords(c.betas[static_cast<size_t>(q)]), phi);
        if (std::all_of(rq.begin(), rq.end(), [](int x) { return x == 0; })) continue;
        LayerGroup g;
        g.restriction = rq;
        for (int i = 0; i < c.size(); ++i)
            if (restrict_coords(sys.coords(c.betas[static_cast<size_t>(i)]), phi) == rq) {
                g.I.push_back(i);
                grouped[static_cast<size_t>(i)] = true;
            }
        for (int i : g.I) g.z.push_back(c.betas[static_cast<size_t>(i)]);
        for (int i : g.I) {
            const SurvivingLayer* s = d.layer(i);
            if (!s) throw StructureViolation("grouped cascade index without a surviving layer");
            g.z.insert(g.z.end(), s->J_double.begin(), s->J_double.end());
            g.l_double.insert(g.l_double.end(), s->J_double.begin(), s->J_double.end());
            g.v.insert(g.v.end(), s->J_prime.begin(), s->J_prime.end());
        }
        g.l = g.z;
        g.l.insert(g.l.end(), g.v.begin(), g.v.end());
        for (RootId a : g.z) g.dim_z += sys.mult(a);
        for (RootId a : g.v) g.dim_v += sys.mult(a);
        g.dim_l = g.dim_z + g.dim_v;
        d.groups.push_back(std::move(g));
    }

    d.group_of.assign(static_cast<size_t>(sys.size()), -1);
    for (size_t j = 0; j < d.groups.size(); ++j)
        for (RootId a : d.groups[j].l) d.group_of[static_cast<size_t>(a)] = static_cast<int>(j);
    for (RootId a : d.split.nil) d.dim_n += sys.mult(a);
    for (const auto& g : d.groups) d.dim_s += g.dim_z;
    return d;
}

bool VerificationReport::all_passed() const {
    return std::all_of(lemmas.begin(), lemmas.end(), [](const LemmaResult& l) { return l.passed; });
}

const LemmaResult& VerificationReport::lemma(const std::string& name) const {
    for (const auto& l : lemmas)
        if (l.name == name) return l;
    throw std::out_of_range("no lemma named " + name);
}

std::vector<LemmaResult> VerificationReport::failures() const {
    std::vector<LemmaResult> out;
    for (const auto& l : lemmas)
        if (!l.passed) out.push_back(l);
    return out;
}

namespace {

class Checker {
public:
    Checker(const RestrictedRootSystem& sys, std::string name) : sys_(sys) { result_.name = std::move(name); }

    // Records the first failure only.
    void fail(std::initializer_list<RootId> roots, const std::string& detail) {
        if (!result_.passed) return;
        result_.passed = false;
        for (RootId r : roots) result_.witness.push_back(sys_.coords(r));
        result_.detail = detail;
    }
    bool failed() const { return !result_.passed; }
    LemmaResult take() { return std::move(result_); }

private:
    const RestrictedRootSystem& sys_;
    LemmaResult result_;
};

}  // namespace

VerificationReport verify_structure(const RestrictedRootSystem& sys, const Cascade& c, const PhiDecomposition& d) {
    VerificationReport report;
    const int m = sys.size();
    std::vector<bool> nil(static_cast<size_t>(m), false);
    for (RootId a : d.split.nil) nil[static_cast<size_t>(a)] = true;
    const auto& phi = d.phi;
    const int ng = static_cast<int>(d.groups.size());

    auto in = [](const std::vector<RootId>& set, RootId a) {
        return std::find(set.begin(), set.end(), a) != set.end();
    };
    // l_{<= j}
    auto below = [&](int j, RootId a) {
        int g = d.group_of[static_cast<size_t>(a)];
        return g >= 0 && g <= j;
    };

    {
        Checker ck(sys, "partition");
        std::vector<int> seen(static_cast<size_t>(m), 0);
        for (const auto& g : d.groups)
            for (RootId a : g.l) ++seen[static_cast<size_t>(a)];
        for (RootId a = 0; a < m; ++a) {
            int expect = nil[static_cast<size_t>(a)] ? 1 : 0;
            if (seen[static_cast<size_t>(a)] != expect) ck.fail({a}, "root content of the groups differs from Phi^nil");
        }
        report.lemmas.push_back(ck.take());
    }
    {
        Checker ck(sys, "index-groups");
        std::set<int> covered;
        for (const auto& g : d.groups)
            for (int i : g.I) {
                if (!covered.insert(i).second) ck.fail({c.betas[static_cast<size_t>(i)]}, "index in two groups");
                if (restrict_coords(sys.coords(c.betas[static_cast<size_t>(i)]), phi) != g.restriction)
                    ck.fail({c.betas[static_cast<size_t>(i)]}, "restriction differs inside a group");
            }
        for (int r = 0; r < c.size(); ++r) {
            bool nonzero = nil[static_cast<size_t>(c.betas[static_cast<size_t>(r)])];
            if (nonzero != (covered.count(r) > 0))
                ck.fail({c.betas[static_cast<size_t>(r)]}, "groups do not cover exactly the nonzero restrictions");
        }
        report.lemmas.push_back(ck.take());
    }
    {
        Checker ck(sys, "inter-center");
        for (int r = 0; r < c.size(); ++r) {
            if (nil[static_cast<size_t>(c.betas[static_cast<size_t>(r)])]) continue;
            for (RootId a : c.layers[static_cast<size_t>(r)])
                if (nil[static_cast<size_t>(a)])
                    ck.fail({c.betas[static_cast<size_t>(r)], a}, "layer meets n_Phi although beta_r does not");
        }
        report.lemmas.push_back(ck.take());
    }
    {
        Checker ck(sys, "inter-compl");
        for (const auto& s : d.surviving) {
            const RootId beta = c.betas[static_cast<size_t>(s.r)];
            const auto rb = restrict_coords(sys.coords(beta), phi);
            for (RootId a : s.J_double)
                if (restrict_coords(sys.coords(a), phi) != rb)
                    ck.fail({beta, a}, "J'' root outside the a_Phi-root space of beta_r");
            for (RootId a : s.J) {
                RootId partner = sigma_r(sys, c, s.r, a);
                bool primed = in(s.J_prime, a), doubled = in(s.J_double, a);
                if (primed == doubled) ck.fail({a}, "J is not the disjoint union of J' and J''");
                if (primed != in(s.J, partner)) ck.fail({a, partner}, "J' is not the sigma-closed part of J");
            }
        }
        report.lemmas.push_back(ck.take());
    }
    {
        Checker ck(sys, "semidirect");
        for (const auto& s : d.surviving) {
            const RootId beta = c.betas[static_cast<size_t>(s.r)];
            std::vector<RootId> center{beta};
            center.insert(center.end(), s.J_double.begin(), s.J_double.end());
            std::vector<RootId> all = center;
            all.insert(all.end(), s.J_prime.begin(), s.J_prime.end());
            for (RootId z : center)
                for (RootId a : all)
                    if (sys.sum_positive(z, a)) ck.fail({z, a}, "claimed central root brackets nontrivially");
            for (RootId a : s.J_prime) {
                bool pairs = false;
                for (RootId b : all)
                    if (sys.sum_positive(a, b)) pairs = true;
                if (!pairs) ck.fail({a}, "J' root is central in l_r cap n_Phi");
            }
        }
        report.lemmas.push_back(ck.take());
    }
    {
        Checker ck(sys, "part-c");
        for (const auto& s : d.surviving) {
            std::vector<RootId> center{c.betas[static_cast<size_t>(s.r)]};
            center.insert(center.end(), s.J_double.begin(), s.J_double.end());
            for (int r = s.r + 1; r < c.size(); ++r) {
                std::vector<RootId> gammas{c.betas[static_cast<size_t>(r)]};
                gammas.insert(gammas.end(), c.layers[static_cast<size_t>(r)].begin(), c.layers[static_cast<size_t>(r)].end());
                for (RootId g : gammas) {
                    if (!nil[static_cast<size_t>(g)]) continue;
                    for (RootId a : center)
                        if (sys.is_root(add(sys.coords(g), sys.coords(a))))
                            ck.fail({g, a}, "later layer brackets into g_beta_s + J''_s");
                }
            }
        }
        report.lemmas.push_back(ck.take());
    }
    {
        Checker ck(sys, "some-brackets");
        for (int j = 0; j < ng; ++j)
            for (int k = j; k < ng; ++k)
                for (RootId g : d.groups[static_cast<size_t>(k)].l)
                    for (RootId a : d.groups[static_cast<size_t>(j)].l) {
                        auto s = sys.sum_positive(g, a);
                        if (s && d.group_of[static_cast<size_t>(*s)] != j)
                            ck.fail({g, a, *s}, "[l_k, l_j] leaves l_j");
                    }
        report.lemmas.push_back(ck.take());
    }
    {
        Checker ck(sys, "not-beta");
        for (int j = 0; j < ng; ++j) {
            std::vector<RootId> betas;
            for (int i : d.groups[static_cast<size_t>(j)].I) betas.push_back(c.betas[static_cast<size_t>(i)]);
            for (int k = j + 1; k < ng; ++k)
                for (RootId g : d.groups[static_cast<size_t>(k)].l)
                    for (RootId a : d.groups[static_cast<size_t>(j)].l) {
                        auto s = sys.sum_positive(g, a);
                        if (s && in(betas, *s)) ck.fail({g, a, *s}, "[l_k, l_j] meets sum of g_beta_i, i in I_j");
                    }
        }
        report.lemmas.push_back(ck.take());
    }
    {
        Checker ck(sys, "central-ideal");
        for (int j = 0; j < ng; ++j) {
            const auto& gj = d.groups[static_cast<size_t>(j)];
            for (int k = j; k < ng; ++k)
                for (RootId g : d.groups[static_cast<size_t>(k)].l)
                    for (RootId z : gj.z)
                        if (sys.sum_positive(g, z)) ck.fail({g, z}, "z_{Phi,j} is not central in the tail algebra");
            // the center of l_{Phi,j} is no larger than z_{Phi,j}
            for (RootId a : gj.v) {
                bool pairs = false;
                for (RootId b : gj.l)
                    if (sys.sum_positive(a, b)) pairs = true;
                if (!pairs) ck.fail({a}, "v root is central in l_{Phi,j}");
            }
        }
        report.lemmas.push_back(ck.take());
    }
    {
        Checker ck(sys, "gen-setup-a");
        for (int j = 0; j < ng; ++j) {
            const auto& g = d.groups[static_cast<size_t>(j)];
            for (RootId a : g.v) {
                int r = c.layer_of[static_cast<size_t>(a)];
                RootId partner = sigma_r(sys, c, r, a);
                if (!in(g.v, partner)) ck.fail({a, partner}, "v root without its sigma partner");
                auto s = sys.sum_positive(a, partner);
                if (!s || !in(g.z, *s)) ck.fail({a, partner}, "sigma pair does not bracket into z");
            }
        }
        report.lemmas.push_back(ck.take());
    }
    {
        Checker ck(sys, "gen-setup-b");
        for (int j = 0; j < ng; ++j) {
            for (RootId g : d.split.nil)
                for (RootId a = 0; a < m; ++a) {
                    if (!below(j, a)) continue;
                    auto s = sys.sum_positive(g, a);
                    if (s && !below(j, *s)) ck.fail({g, a, *s}, "N_{Phi,j} is not normal in N_Phi");
                }
        }
        report.lemmas.push_back(ck.take());
    }
    {
        Checker ck(sys, "gen-setup-c");
        for (int j = 0; j < ng; ++j) {
            const auto& gj = d.groups[static_cast<size_t>(j)];
            for (int k = j + 1; k < ng; ++k)
                for (RootId g : d.groups[static_cast<size_t>(k)].l) {
                    for (RootId z : gj.z)
                        if (sys.sum_positive(g, z)) ck.fail({g, z}, "[l_k, z_j] != 0");
                    for (RootId a : gj.l) {
                        auto s = sys.sum_positive(g, a);
                        if (s && !in(gj.v, *s) && !in(gj.l_double, *s))
                            ck.fail({g, a, *s}, "[l_k, l_j] not inside v_j + l''_j");
                    }
                }
        }
        report.lemmas.push_back(ck.take());
    }
    {
        Checker ck(sys, "nilradical-closure");
        for (RootId a : d.split.nil)
            for (RootId b : d.split.nil) {
                auto s = sys.sum_positive(a, b);
                if (s && !nil[static_cast<size_t>(*s)]) ck.fail({a, b, *s}, "bracket leaves n_Phi");
            }
        report.lemmas.push_back(ck.take());
    }
    return report;
}

std::vector<RootId> root_class(const RestrictedRootSystem& sys, const ParabolicSubset& phi, RootId alpha) {
    const auto target = restrict_coords(sys.coords(alpha), phi);
    std::vector<RootId> out;
    for (RootId a = 0; a < sys.size(); ++a)
        if (restrict_coords(sys.coords(a), phi) == target) out.push_back(a);
    return out;
}

bool InvarianceReport::all_invariant() const {
    return std::all_of(per_group.begin(), per_group.end(), [](Invariance i) { return i == Invariance::invariant; });
}

InvarianceReport invariance_class(const RestrictedRootSystem& sys, const Cascade& c, const PhiDecomposition& d) {
    InvarianceReport rep;
    for (const auto& g : d.groups) {
        auto cls = root_class(sys, d.phi, c.betas[static_cast<size_t>(g.I.front())]);
        std::set<RootId> a(cls.begin(), cls.end()), b(g.z.begin(), g.z.end());
        rep.per_group.push_back(a == b ? Invariance::invariant : Invariance::not_invariant);
        rep.group_classes.push_back(std::move(cls));
    }
    for (RootId a : d.split.nil) rep.classes[restrict_coords(sys.coords(a), d.phi)].push_back(a);
    return rep;
}

}  // namespace pcascade
