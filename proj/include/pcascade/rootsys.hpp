#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pcascade/numbers.hpp"

namespace pcascade {

enum class Family { A, B, C, D, BC };

std::string_view family_name(Family f);
Family parse_family(std::string_view name);

struct RootSystemType {
    Family family = Family::A;
    int rank = 1;

    friend bool operator==(const RootSystemType&, const RootSystemType&) = default;
    friend auto operator<=>(const RootSystemType&, const RootSystemType&) = default;
};

/// Smallest rank accepted for a family.
int min_rank(Family f);

/// Coefficients n_i of a root over the simple roots psi_1..psi_rank.
using Coords = std::vector<int>;

/// Index into RestrictedRootSystem::positive().
using RootId = int;

struct Root {
    Coords simple_coords;
    /// Standard Euclidean realization; every classical realization used here is integral.
    std::vector<int> ambient;

    int height() const;
    friend bool operator==(const Root&, const Root&) = default;
};

/// Multiplicity data supplied at construction. An empty map selects the split form (all ones).
struct MultiplicityPreset {
    enum class Kind { split_ones, user } kind = Kind::split_ones;
    std::map<Coords, int> user;

    static MultiplicityPreset split() { return {}; }
    static MultiplicityPreset from_map(std::map<Coords, int> m) {
        return {Kind::user, std::move(m)};
    }
};

/**
 * Restricted root system of classical type with multiplicities.
 *
 * Simple roots follow the diagram ordering used by the propagation code:
 * for B, C, D (and BC) psi_1 is the right end of the diagram, realized on
 * reversed coordinates eps_1..eps_n so that adding rank adds nodes on the left.
 *
 *   A_n : psi_i = e_i - e_{i+1} in Q^{n+1}
 *   B_n : psi_1 = eps_1,          psi_k = eps_k - eps_{k-1}
 *   C_n : psi_1 = 2 eps_1,        psi_k = eps_k - eps_{k-1}
 *   D_n : psi_1 = eps_2 - eps_1,  psi_2 = eps_2 + eps_1,  psi_k = eps_k - eps_{k-1}
 *   BC_n: simple roots of B_n, roots B_n plus {2 eps_i}
 *
 * Positive roots are sorted by height, then lexicographically by coordinates.
 */
class RestrictedRootSystem {
public:
    RestrictedRootSystem() = default;

    const RootSystemType& type() const { return type_; }
    int rank() const { return type_.rank; }
    int ambient_dim() const { return ambient_dim_; }

    const std::vector<Root>& simple() const { return simple_; }
    const std::vector<Root>& positive() const { return positive_; }
    const Root& root(RootId id) const { return positive_.at(static_cast<size_t>(id)); }
    const Coords& coords(RootId id) const { return root(id).simple_coords; }
    int size() const { return static_cast<int>(positive_.size()); }

    int mult(RootId id) const { return mult_.at(static_cast<size_t>(id)); }
    bool is_split() const;
    bool nonmultipliable(RootId id) const { return nonmult_.at(static_cast<size_t>(id)); }

    std::optional<RootId> find_positive(const Coords& v) const;
    RootId id_of(const Coords& v) const;  // throws NotARoot
    bool is_root(const Coords& v) const;
    bool is_positive_root(const Coords& v) const { return find_positive(v).has_value(); }

    /// alpha + beta when it is a root; absent otherwise.
    std::optional<Coords> sum_root(const Coords& alpha, const Coords& beta) const;
    /// Positive-root id of alpha+beta when it is a positive root.
    std::optional<RootId> sum_positive(RootId a, RootId b) const;

    /// Euclidean pairing of the functionals with the given simple coordinates.
    int pairing(const Coords& a, const Coords& b) const;
    int pairing(RootId a, RootId b) const { return gram_ids_[index2(a, b)]; }
    bool orthogonal(RootId a, RootId b) const { return pairing(a, b) == 0; }

    /// s_beta(alpha) = alpha - 2<alpha,beta>/<beta,beta> beta, exact.
    Coords reflect(const Coords& beta, const Coords& alpha) const;

    std::vector<int> ambient_of(const Coords& c) const;

private:
    friend RestrictedRootSystem build_system(const RootSystemType&, const MultiplicityPreset&);

    size_t index2(RootId a, RootId b) const {
        return static_cast<size_t>(a) * positive_.size() + static_cast<size_t>(b);
    }

    RootSystemType type_;
    int ambient_dim_ = 0;
    std::vector<Root> simple_;
    std::vector<Root> positive_;
    std::vector<int> mult_;
    std::vector<bool> nonmult_;
    std::map<Coords, RootId> index_;
    std::vector<std::vector<int>> simple_gram_;
    std::vector<int> gram_ids_;
    std::vector<int> sum_table_;  // -1 when the sum is not a positive root
};

/// Throws InvalidRank, IncompleteMultiplicity, InvalidMultiplicity.
RestrictedRootSystem build_system(const RootSystemType& type,
                                  const MultiplicityPreset& preset = MultiplicityPreset::split());

/// |Delta^+| from the closed-form count of the family.
int expected_positive_count(const RootSystemType& type);

std::string coords_to_string(const Coords& c);
Coords negate(Coords c);
Coords add(const Coords& a, const Coords& b);
Coords subtract(const Coords& a, const Coords& b);
bool is_zero(const Coords& c);

}  // namespace pcascade
