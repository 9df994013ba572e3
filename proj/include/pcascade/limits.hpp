#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pcascade/cascade.hpp"
#include "pcascade/density.hpp"
#include "pcascade/parabolic.hpp"
#include "pcascade/rootsys.hpp"

namespace pcascade {

/**
 * Centered labels for A_n. The origin is the middle node for odd n and the
 * node right of the middle for even n; side is -1 (left), 0 (origin) or +1,
 * and the signed label is side * distance. Even n has no node at distance 0.
 *
 *   n = 2m+1: internal i (1-based) <-> k = i - (m+1)
 *   n = 2m  : i <= m <-> k = i - m - 1,  i > m <-> k = i - m
 */
struct CenteredLabel {
    int side = 0;
    int distance = 0;

    int signed_index() const { return side * distance; }
    friend bool operator==(const CenteredLabel&, const CenteredLabel&) = default;
};

CenteredLabel centered_label(int rank, int one_based);
/// Throws UsageError if k is not a label of A_rank.
int from_centered(int rank, int k);

/// Image of each simple root of type n in type l (0-based). B/C/D keep indices and add
/// nodes on the left; A adds (l-n)/2 nodes on each side and needs l-n even.
/// Throws IncompatibleFamily.
std::vector<int> simple_embedding(const RootSystemType& n, const RootSystemType& l);
Coords embed_coords(const std::vector<int>& simple_map, int target_rank, const Coords& c);
/// Positive-root injection induced by the diagram embedding.
std::vector<RootId> propagate(const RestrictedRootSystem& small, const RestrictedRootSystem& large);

struct PropagationChain {
    Family family = Family::A;
    std::vector<int> ranks;
    /// Parabolic subset per rank; empty map when the chain carries no family.
    std::map<int, ParabolicSubset> phis;

    bool has_phis() const { return !phis.empty(); }
    /// {family, ranks, phi: {rank: [1-based indices]}, phi_labels: "internal" | "centered"}.
    static PropagationChain from_json(const nlohmann::json& j);
};

struct ChainLevel {
    int rank = 0;
    RestrictedRootSystem system;
    Cascade cascade;
    PhiDecomposition decomp;
    /// Cascade indices in Part-II order (reversed cascade).
    std::vector<int> part2;
    /// Index groups as sorted 1-based Part-II indices, ordered by their smallest element.
    std::vector<std::vector<int>> groups;
};

ChainLevel build_level(const PropagationChain& chain, int rank);

struct FamilyViolationRecord {
    int level = 0;
    std::string kind;  // "N", "U", "cascade", "groups", "class"
    std::string witness;
};

struct FamilyReport {
    bool n_admissible = true;
    /// No condition beyond propagation itself.
    bool a_admissible = true;
    bool u_admissible = true;
    bool e_admissible = true;
    /// Every Phi_n = Psi_n, so N_{Phi,infinity} is trivial.
    bool n_empty = false;
    bool cascade_nesting = true;
    bool groups_nest = true;
    bool classes_nest = true;
    std::map<int, std::vector<std::vector<int>>> groups_by_rank;
    std::vector<std::vector<int>> i_infinity;
    std::vector<FamilyViolationRecord> violations;

    bool passed() const { return violations.empty(); }
    /// Throws FamilyViolation for the first recorded violation.
    void enforce() const;
};

/// Requires a Phi-family; throws UsageError otherwise.
FamilyReport check_family(const PropagationChain& chain);

/// |P_n(gamma_n)| / |P_l(gamma_l)| with gamma_n the restriction of gamma_l, which is given
/// in the variable order of the level-l density. Throws SingularParameter if P_l(gamma_l) = 0.
Rational renormalization_ratio(const PropagationChain& chain, int n, int l, const std::vector<Rational>& gamma_l);

/// gamma_l (level-l density variable order) restricted to the level-n variables.
/// Throws FamilyViolation if a level-n variable does not stay central at level l.
std::vector<Rational> restrict_parameter(const PropagationChain& chain, int n, int l,
                                         const std::vector<Rational>& gamma_l);

/// Variables of the level-l Plancherel density, in evaluation order.
std::vector<std::string> density_variables(const PropagationChain& chain, int l);

/// c_n of the level-n decomposition; absent when some d_j is not an integer.
std::optional<BigInt> inversion_constant(const PropagationChain& chain, int n);

}  // namespace pcascade
