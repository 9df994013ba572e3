#pragma once

#include <map>
#include <string>
#include <vector>

#include "pcascade/cascade.hpp"
#include "pcascade/numbers.hpp"
#include "pcascade/rootsys.hpp"

namespace pcascade {

/// Subset Phi of the simple roots, stored as sorted 0-based indices.
class ParabolicSubset {
public:
    ParabolicSubset() = default;
    ParabolicSubset(int rank, std::vector<int> zero_based);
    static ParabolicSubset from_one_based(int rank, const std::vector<int>& one_based);
    static ParabolicSubset empty(int rank) { return {rank, {}}; }
    static ParabolicSubset full(int rank);
    /// Subset encoded by the bits of `mask` (bit i = psi_{i+1}).
    static ParabolicSubset from_mask(int rank, unsigned mask);

    int rank() const { return rank_; }
    const std::vector<int>& phi() const { return phi_; }
    const std::vector<int>& complement() const { return complement_; }
    bool contains(int i) const { return in_phi_.at(static_cast<size_t>(i)); }
    std::vector<int> one_based() const;

    friend bool operator==(const ParabolicSubset& a, const ParabolicSubset& b) {
        return a.rank_ == b.rank_ && a.phi_ == b.phi_;
    }

private:
    int rank_ = 0;
    std::vector<int> phi_;
    std::vector<int> complement_;
    std::vector<bool> in_phi_;
};

/// Linear functional on a_Phi, coefficients indexed by the complement of Phi.
struct RestrictedWeight {
    std::vector<Rational> coeffs;

    bool is_zero() const;
    RestrictedWeight& operator+=(const RestrictedWeight& o);
    friend RestrictedWeight operator+(RestrictedWeight a, const RestrictedWeight& b) { return a += b; }
    friend RestrictedWeight operator*(const Rational& s, RestrictedWeight w);
    friend bool operator==(const RestrictedWeight&, const RestrictedWeight&) = default;
    std::vector<std::string> to_strings() const;
};

/// Restriction of alpha = sum n_i psi_i to a_Phi: the vector (n_i) for psi_i outside Phi.
std::vector<int> restrict_coords(const Coords& alpha, const ParabolicSubset& phi);
RestrictedWeight restrict_root(const Coords& alpha, const ParabolicSubset& phi);

struct PhiSplit {
    /// Phi^red consists of these roots and their negatives.
    std::vector<RootId> red_positive;
    std::vector<RootId> nil;
};

PhiSplit phi_split(const RestrictedRootSystem& system, const ParabolicSubset& phi);

struct SurvivingLayer {
    int r = 0;  // cascade index (0-based)
    std::vector<RootId> J, J_prime, J_double;
};

struct LayerGroup {
    std::vector<int> I;           // cascade indices, increasing
    std::vector<RootId> z;        // betas of I, then J'' of each layer
    std::vector<RootId> v;        // J' of each layer
    std::vector<RootId> l;        // z u v
    std::vector<RootId> l_double; // J'' of each layer
    std::vector<int> restriction; // beta_{j0} restricted to a_Phi
    int dim_l = 0, dim_z = 0, dim_v = 0;
};

/// Grouped decomposition n_Phi = l_{Phi,1} + ... + l_{Phi,ell}.
struct PhiDecomposition {
    ParabolicSubset phi;
    PhiSplit split;
    std::vector<SurvivingLayer> surviving;
    std::vector<LayerGroup> groups;
    /// Group index of each positive root in n_Phi, -1 elsewhere.
    std::vector<int> group_of;
    int dim_n = 0;
    int dim_s = 0;

    const SurvivingLayer* layer(int r) const;
};

PhiDecomposition decompose(const RestrictedRootSystem& system, const Cascade& cascade, const ParabolicSubset& phi);

struct LemmaResult {
    std::string name;
    bool passed = true;
    std::vector<Coords> witness;
    std::string detail;
};

struct VerificationReport {
    std::vector<LemmaResult> lemmas;

    bool all_passed() const;
    const LemmaResult& lemma(const std::string& name) const;
    std::vector<LemmaResult> failures() const;
};

/**
 * Root-level checks of the structural lemmas for the grouped decomposition.
 * Every check is an exhaustive scan over root sums; a failed check records
 * the first witness roots found.
 */
VerificationReport verify_structure(const RestrictedRootSystem& system, const Cascade& cascade,
                                    const PhiDecomposition& decomp);

enum class Invariance { invariant, not_invariant };

struct InvarianceReport {
    std::vector<Invariance> per_group;
    /// [beta_{j0}]_Phi for each group.
    std::vector<std::vector<RootId>> group_classes;
    /// Every class [alpha]_Phi for alpha in Phi^nil, keyed by the restriction.
    std::map<std::vector<int>, std::vector<RootId>> classes;

    bool all_invariant() const;
};

/// Root class [alpha]_Phi = { gamma in Delta^+ : gamma|a_Phi = alpha|a_Phi }.
std::vector<RootId> root_class(const RestrictedRootSystem& system, const ParabolicSubset& phi, RootId alpha);

InvarianceReport invariance_class(const RestrictedRootSystem& system, const Cascade& cascade,
                                  const PhiDecomposition& decomp);

}  // namespace pcascade
