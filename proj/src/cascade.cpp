#include "pcascade/cascade.hpp"

#include <algorithm>
#include <set>

#include "pcascade/errors.hpp"

namespace pcascade {

namespace {

// alpha >= beta in the positive-root order: alpha - beta is a nonnegative combination.
bool dominates(const Coords& a, const Coords& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] < b[i]) return false;
    return true;
}

// Connected component of `root` in the graph on `pool` where two roots are joined
// when they are not orthogonal.
std::set<RootId> component_of(const RestrictedRootSystem& sys, const std::vector<RootId>& pool, RootId root) {
    std::set<RootId> comp{root};
    std::vector<RootId> stack{root};
    while (!stack.empty()) {
        RootId a = stack.back();
        stack.pop_back();
        for (RootId b : pool)
            if (!comp.count(b) && !sys.orthogonal(a, b)) {
                comp.insert(b);
                stack.push_back(b);
            }
    }
    return comp;
}

}  // namespace

Cascade build_cascade(const RestrictedRootSystem& sys) {
    Cascade c;
    const int m = sys.size();
    std::vector<RootId> pool(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) pool[static_cast<size_t>(i)] = i;

    std::vector<std::set<RootId>> components;
    while (!pool.empty()) {
        // maximal elements of the pool; ties broken by the lexicographically largest coordinates
        std::vector<RootId> maximal;
        for (RootId a : pool) {
            bool is_max = true;
            for (RootId b : pool)
                if (b != a && dominates(sys.coords(b), sys.coords(a))) {
                    is_max = false;
                    break;
                }
            if (is_max) maximal.push_back(a);
        }
        RootId best = *std::max_element(maximal.begin(), maximal.end(), [&](RootId a, RootId b) {
            return sys.coords(a) < sys.coords(b);
        });
        components.push_back(component_of(sys, pool, best));
        c.betas.push_back(best);
        std::vector<RootId> next;
        for (RootId a : pool)
            if (a != best && sys.orthogonal(a, best)) next.push_back(a);
        pool = std::move(next);
    }

    const int nb = c.size();
    c.layer_of.assign(static_cast<size_t>(m), -1);
    c.is_beta.assign(static_cast<size_t>(m), false);
    for (int r = 0; r < nb; ++r) {
        c.layer_of[static_cast<size_t>(c.betas[static_cast<size_t>(r)])] = r;
        c.is_beta[static_cast<size_t>(c.betas[static_cast<size_t>(r)])] = true;
    }
    c.layers.resize(static_cast<size_t>(nb));
    for (int r = 0; r < nb; ++r) {
        const Coords& beta = sys.coords(c.betas[static_cast<size_t>(r)]);
        for (RootId a = 0; a < m; ++a) {
            if (c.layer_of[static_cast<size_t>(a)] >= 0) continue;
            if (sys.is_positive_root(subtract(beta, sys.coords(a)))) {
                c.layers[static_cast<size_t>(r)].push_back(a);
                c.layer_of[static_cast<size_t>(a)] = r;
            }
        }
    }

    c.sigma.resize(static_cast<size_t>(nb));
    for (int r = 0; r < nb; ++r)
        for (RootId a : c.layers[static_cast<size_t>(r)]) c.sigma[static_cast<size_t>(r)].push_back(sigma_r(sys, c, r, a));

    for (int r = 0; r < nb; ++r)
        for (int s = r + 1; s < nb; ++s) {
            const auto& big = components[static_cast<size_t>(r)];
            const auto& small = components[static_cast<size_t>(s)];
            if (std::includes(big.begin(), big.end(), small.begin(), small.end())) c.component_order.emplace_back(r, s);
        }
    return c;
}

RootId sigma_r(const RestrictedRootSystem& sys, const Cascade& c, int r, RootId alpha) {
    if (r < 0 || r >= c.size() || c.is_beta[static_cast<size_t>(alpha)] ||
        c.layer_of[static_cast<size_t>(alpha)] != r) {
        throw LayerMismatch(coords_to_string(sys.coords(alpha)) + " is not in layer " + std::to_string(r + 1));
    }
    Coords image = negate(sys.reflect(sys.coords(c.betas[static_cast<size_t>(r)]), sys.coords(alpha)));
    RootId out = sys.id_of(image);
    if (c.layer_of[static_cast<size_t>(out)] != r || c.is_beta[static_cast<size_t>(out)])
        throw StructureViolation("sigma_" + std::to_string(r + 1) + " does not preserve its layer");
    return out;
}

bool heisenberg_check(const RestrictedRootSystem& sys, const Cascade& c, int r) {
    const auto& layer = c.layers.at(static_cast<size_t>(r));
    const RootId beta = c.betas[static_cast<size_t>(r)];
    for (RootId a : layer)
        for (RootId b : layer) {
            auto s = sys.sum_root(sys.coords(a), sys.coords(b));
            if (s && *s != sys.coords(beta)) return false;
        }
    return true;
}

}  // namespace pcascade
