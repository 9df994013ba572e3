#pragma once

#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <vector>

#include "pcascade/numbers.hpp"
#include "pcascade/rootsys.hpp"

namespace pcascade {

/**
 * Structure constants N_{alpha,beta} of a Chevalley basis of the split real form,
 * [x_alpha, x_beta] = N_{alpha,beta} x_{alpha+beta}, for all roots alpha, beta
 * (positive and negative) with alpha+beta a root.
 *
 * Root vectors come from the matrix realizations gl(n+1), so(2n+1), sp(2n),
 * so(2n); non-simple positive root vectors are defined recursively through
 * extraspecial pairs so that N is positive on every extraspecial pair.
 */
class StructureTable {
public:
    const RootSystemType& type() const { return type_; }
    int num_positive() const { return m_; }

    /// Constant for positive roots a, b; 0 when a+b is not a root.
    int constant(RootId a, RootId b) const { return table_[index(a, b)]; }
    /// Constant for signed roots; absent when alpha+beta is not a root.
    /// Throws CartanDirection when alpha+beta = 0 and NotARoot for non-roots.
    std::optional<int> constant(const Coords& alpha, const Coords& beta) const;

    /// (alpha, beta, N) over all ordered pairs of roots whose sum is a root.
    std::vector<std::tuple<Coords, Coords, int>> entries() const;

private:
    friend std::shared_ptr<const StructureTable> build_constants(const RestrictedRootSystem&);

    size_t index(int a, int b) const { return static_cast<size_t>(a) * static_cast<size_t>(2 * m_) + static_cast<size_t>(b); }
    int signed_id(const Coords& c) const;

    RootSystemType type_;
    int m_ = 0;
    std::vector<Coords> roots_;  // positives, then their negatives
    std::map<Coords, int> ids_;
    std::vector<int> table_;
};

/// Built once per root-system type and cached. Throws UnsupportedForm for non-split input.
std::shared_ptr<const StructureTable> build_constants(const RestrictedRootSystem& system);

/// Largest p with beta - p*alpha a root.
int string_length_below(const RestrictedRootSystem& system, const Coords& alpha, const Coords& beta);

/// Formal linear combination of root vectors x_alpha.
using RootVectorCombination = std::map<Coords, Rational>;

/// Bilinear bracket on root vectors. Throws CartanDirection if it needs [x_alpha, x_{-alpha}].
RootVectorCombination bracket(const StructureTable& table, const RootVectorCombination& x,
                              const RootVectorCombination& y);

/// CSV with header alpha,beta,N; coordinates written as space-separated integers.
void export_csv(const StructureTable& table, std::ostream& out);

}  // namespace pcascade
