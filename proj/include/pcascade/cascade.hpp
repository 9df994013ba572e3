#pragma once

#include <utility>
#include <vector>

#include "pcascade/rootsys.hpp"

namespace pcascade {

/**
 * Maximal strongly orthogonal cascade beta_1..beta_m and the layer partition
 *
 *   Delta^+ = {beta_1..beta_m} u Delta^+_1 u ... u Delta^+_m   (disjoint),
 *   Delta^+_r = { alpha not in earlier layers : beta_r - alpha in Delta^+ }.
 *
 * Indices r are 0-based internally; reports and JSON use 1-based indices.
 */
struct Cascade {
    std::vector<RootId> betas;
    std::vector<std::vector<RootId>> layers;
    /// sigma[r][k] = sigma_r(layers[r][k]) as a root id inside layers[r].
    std::vector<std::vector<RootId>> sigma;
    /// For each positive root: cascade index r if the root is beta_r or lies in Delta^+_r.
    std::vector<int> layer_of;
    std::vector<bool> is_beta;
    /// Pairs (r, s), r < s, with beta_s > beta_r in the component order (metadata only).
    std::vector<std::pair<int, int>> component_order;

    int size() const { return static_cast<int>(betas.size()); }
};

Cascade build_cascade(const RestrictedRootSystem& system);

/// sigma_r(alpha) = -s_{beta_r}(alpha); throws LayerMismatch if alpha is not in Delta^+_r.
RootId sigma_r(const RestrictedRootSystem& system, const Cascade& cascade, int r, RootId alpha);

/// True iff every sum of two roots of Delta^+_r that is a root equals beta_r.
bool heisenberg_check(const RestrictedRootSystem& system, const Cascade& cascade, int r);

}  // namespace pcascade
