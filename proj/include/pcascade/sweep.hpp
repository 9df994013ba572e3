#pragma once

#include <string>
#include <vector>

#include "pcascade/parabolic.hpp"
#include "pcascade/rootsys.hpp"

namespace pcascade {

/// Outcome of verify + density for one subset Phi.
struct SweepCase {
    ParabolicSubset phi;
    std::vector<LemmaResult> lemma_failures;
    int groups = 0;
    int non_invariant_groups = 0;
    /// Density-side checks; they stay true (vacuously) when densities are unavailable.
    bool density_computed = false;
    bool ledger_holds = true;
    bool degree_identity = true;
    bool easy_tilde = true;
    bool pfaffians_nonzero = true;
    /// Message of an exception raised while processing this subset.
    std::string error;

    bool passed() const;
};

struct SweepResult {
    RootSystemType type;
    /// Ordered by subset mask (bit i = psi_{i+1}).
    std::vector<SweepCase> cases;

    bool all_passed() const;
    int failures() const;
};

/// Threads to use: PC_THREADS if set to a positive integer, otherwise the hardware count.
int thread_budget();

/**
 * Runs verify_structure, the weight ledger and (split A-D only) the Pfaffian
 * checks over all 2^rank subsets. Results do not depend on the thread count.
 */
SweepResult sweep(const RootSystemType& type, int threads = thread_budget());

}  // namespace pcascade
