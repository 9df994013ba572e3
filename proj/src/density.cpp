#include "pcascade/density.hpp"

#include <algorithm>
#include <set>

#include "pcascade/errors.hpp"

namespace pcascade {

std::string variable_name(const Coords& alpha) {
    std::string s = "z";
    for (int c : alpha) s += std::to_string(c);
    return s;
}

std::vector<RootId> quasi_center_roots(const PhiDecomposition& d, const Cascade& c) {
    std::vector<RootId> out;
    for (const auto& g : d.groups) {
        for (int i : g.I) out.push_back(c.betas[static_cast<size_t>(i)]);
        std::vector<RootId> jd = g.l_double;
        std::sort(jd.begin(), jd.end());
        out.insert(out.end(), jd.begin(), jd.end());
    }
    return out;
}

std::vector<RootId> layer_basis(const RestrictedRootSystem& sys, const Cascade& c, const PhiDecomposition& d, int j) {
    const auto& g = d.groups.at(static_cast<size_t>(j));
    std::vector<std::pair<RootId, RootId>> pairs;
    std::set<RootId> placed;
    for (RootId a : g.v) {
        if (placed.count(a)) continue;
        RootId b = sigma_r(sys, c, c.layer_of[static_cast<size_t>(a)], a);
        if (sys.coords(b) < sys.coords(a)) std::swap(a, b);
        pairs.emplace_back(a, b);
        placed.insert(a);
        placed.insert(b);
    }
    std::sort(pairs.begin(), pairs.end(),
              [&](const auto& x, const auto& y) { return sys.coords(x.first) < sys.coords(y.first); });
    std::vector<RootId> out;
    for (const auto& [a, b] : pairs) {
        out.push_back(a);
        out.push_back(b);
    }
    return out;
}

AntisymmetricPolyMatrix bilinear_form_matrix(const RestrictedRootSystem& sys, const StructureTable& table,
                                             const std::vector<RootId>& basis, const std::vector<RootId>& center) {
    std::vector<std::string> vars;
    for (RootId z : center) vars.push_back(variable_name(sys.coords(z)));
    AntisymmetricPolyMatrix m(basis.size(), vars);
    for (size_t a = 0; a < basis.size(); ++a)
        for (size_t b = a + 1; b < basis.size(); ++b) {
            auto s = sys.sum_positive(basis[a], basis[b]);
            if (!s) continue;
            auto it = std::find(center.begin(), center.end(), *s);
            if (it == center.end()) continue;
            Polynomial p = Polynomial::variable(vars, static_cast<size_t>(it - center.begin()));
            m.set(a, b, p * BigInt(table.constant(basis[a], basis[b])));
        }
    return m;
}

Polynomial layer_pfaffian(const RestrictedRootSystem& sys, const Cascade& c, const PhiDecomposition& d,
                          const StructureTable& table, int j) {
    auto m = bilinear_form_matrix(sys, table, layer_basis(sys, c, d, j), quasi_center_roots(d, c));
    Polynomial pf = pfaffian(m);
    if (pf.is_zero())
        throw StructureViolation("vanishing Pfaffian for group " + std::to_string(j + 1));
    return pf;
}

bool easy_tilde_check(const RestrictedRootSystem& sys, const Cascade& c, const PhiDecomposition& d,
                      const StructureTable& table, int j) {
    const auto& g = d.groups.at(static_cast<size_t>(j));
    const auto cls = root_class(sys, d.phi, c.betas[static_cast<size_t>(g.I.front())]);
    Polynomial pf = pfaffian(bilinear_form_matrix(sys, table, layer_basis(sys, c, d, j), cls));
    std::set<std::string> allowed;
    for (RootId z : g.z) allowed.insert(variable_name(sys.coords(z)));
    for (const auto& v : variables_used(pf))
        if (!allowed.count(v)) return false;
    return true;
}

namespace {

int rank_of(std::vector<std::vector<Rational>> rows) {
    int rank = 0;
    const size_t cols = rows.empty() ? 0 : rows[0].size();
    for (size_t col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
        size_t piv = static_cast<size_t>(rank);
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[static_cast<size_t>(rank)]);
        const auto& p = rows[static_cast<size_t>(rank)];
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == static_cast<size_t>(rank) || rows[r][col] == 0) continue;
            Rational f = rows[r][col] / p[col];
            for (size_t k = col; k < cols; ++k) rows[r][k] -= f * p[k];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

WeightLedger weights(const RestrictedRootSystem& sys, const Cascade& c, const PhiDecomposition& d) {
    WeightLedger w;
    const size_t k = d.phi.complement().size();
    const RestrictedWeight zero{std::vector<Rational>(k, Rational(0))};
    w.delta_weight = w.p_weight = w.det_weight = w.trace_weight = zero;
    std::vector<std::vector<Rational>> restrictions;
    for (const auto& g : d.groups) {
        RestrictedWeight beta = restrict_root(sys.coords(c.betas[static_cast<size_t>(g.I.front())]), d.phi);
        w.delta_weight += Rational(g.dim_l + g.dim_z, 2) * beta;
        w.p_weight += Rational(g.dim_v, 2) * beta;
        w.det_weight += Rational(g.dim_z) * beta;
        restrictions.push_back(beta.coeffs);
    }
    for (RootId a : d.split.nil) w.trace_weight += Rational(sys.mult(a)) * restrict_root(sys.coords(a), d.phi);
    if (!(w.trace_weight == w.delta_weight))
        throw StructureViolation("modular weight differs from the trace of ad on n_Phi");
    w.aprime_dim = static_cast<int>(k) - rank_of(std::move(restrictions));
    return w;
}

std::optional<BigInt> stepwise_constant(const PhiDecomposition& d) {
    BigInt c = 1;
    for (const auto& g : d.groups) {
        if (g.dim_v % 2) return std::nullopt;
        const int dj = g.dim_v / 2;
        for (int i = 1; i <= dj; ++i) c *= 2 * i;  // 2^d d!
    }
    return c;
}

PlancherelData plancherel_data(const RestrictedRootSystem& sys, const Cascade& c, const PhiDecomposition& d) {
    auto table = build_constants(sys);
    PlancherelData out;
    out.variable_roots = quasi_center_roots(d, c);
    for (RootId z : out.variable_roots) out.variables.push_back(variable_name(sys.coords(z)));
    out.density = Polynomial::constant(out.variables, 1);
    out.det_sphi = Polynomial::constant(out.variables, 1);
    for (size_t i = 0; i < out.variables.size(); ++i) out.det_sphi *= Polynomial::variable(out.variables, i);
    for (size_t j = 0; j < d.groups.size(); ++j) {
        GroupDensity gd;
        gd.j = static_cast<int>(j);
        gd.d = d.groups[j].dim_v / 2;
        gd.pf = layer_pfaffian(sys, c, d, *table, static_cast<int>(j));
        out.density *= gd.pf;
        out.per_group.push_back(std::move(gd));
    }
    out.c_const = stepwise_constant(d);
    out.deg_P = out.density.total_degree();
    out.deg_det = out.det_sphi.total_degree();
    out.half_dim_sum = Rational(d.dim_n + d.dim_s, 2);
    return out;
}

}  // namespace pcascade
