#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcascade/cascade.hpp"
#include "pcascade/chevalley.hpp"
#include "pcascade/parabolic.hpp"
#include "pcascade/poly.hpp"

namespace pcascade {

/// Name of the dual coordinate of the root vector x_alpha: "z" followed by the coordinates.
std::string variable_name(const Coords& alpha);

/// Variables of s_Phi^*: for each group, the betas of I_j and then the sorted J'' roots.
std::vector<RootId> quasi_center_roots(const PhiDecomposition& decomp, const Cascade& cascade);

/// Ordered basis of v_{Phi,j}: sigma-pairs adjacent, lexicographically smaller root first.
std::vector<RootId> layer_basis(const RestrictedRootSystem& system, const Cascade& cascade,
                                const PhiDecomposition& decomp, int j);

/// Matrix of b_lambda(x_alpha, x_alpha') = lambda([x_alpha, x_alpha']) on `basis`, keeping
/// only the components of lambda along `center` (one variable per root, in that order).
AntisymmetricPolyMatrix bilinear_form_matrix(const RestrictedRootSystem& system, const StructureTable& table,
                                             const std::vector<RootId>& basis, const std::vector<RootId>& center);

/// Pfaffian of group j over the variables of all of s_Phi^*. Throws StructureViolation if zero.
Polynomial layer_pfaffian(const RestrictedRootSystem& system, const Cascade& cascade,
                          const PhiDecomposition& decomp, const StructureTable& table, int j);

/// Recomputes the Pfaffian of group j with variables for the whole class [beta_{j0}]_Phi and
/// reports whether only variables of z_{Phi,j} occur.
bool easy_tilde_check(const RestrictedRootSystem& system, const Cascade& cascade,
                      const PhiDecomposition& decomp, const StructureTable& table, int j);

struct WeightLedger {
    RestrictedWeight delta_weight, p_weight, det_weight;
    /// Sum over Phi^nil of mult(alpha) * alpha restricted to a_Phi.
    RestrictedWeight trace_weight;
    int aprime_dim = 0;

    bool ledger_holds() const { return p_weight + det_weight == delta_weight; }
};

/// Throws StructureViolation when the grouped and root-by-root modular weights disagree.
WeightLedger weights(const RestrictedRootSystem& system, const Cascade& cascade, const PhiDecomposition& decomp);

/// c = 2^{d_1+...+d_m} d_1!...d_m! with d_j = dim v_{Phi,j} / 2; absent if some dim v_{Phi,j} is odd.
std::optional<BigInt> stepwise_constant(const PhiDecomposition& decomp);

struct GroupDensity {
    int j = 0;
    int d = 0;
    Polynomial pf;
};

struct PlancherelData {
    std::vector<std::string> variables;
    std::vector<RootId> variable_roots;
    std::vector<GroupDensity> per_group;
    Polynomial density;  // P
    Polynomial det_sphi; // Det
    std::optional<BigInt> c_const;
    int deg_P = 0, deg_det = 0;
    /// (dim n_Phi + dim s_Phi) / 2
    Rational half_dim_sum;

    bool degree_identity_holds() const { return Rational(deg_P + deg_det) == half_dim_sum; }
};

/// Available for split systems of type A-D; throws UnsupportedForm otherwise.
PlancherelData plancherel_data(const RestrictedRootSystem& system, const Cascade& cascade,
                               const PhiDecomposition& decomp);

}  // namespace pcascade
