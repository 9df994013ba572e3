#include "pcascade/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

#include "pcascade/cascade.hpp"
#include "pcascade/density.hpp"
#include "pcascade/errors.hpp"

namespace pcascade {

bool SweepCase::passed() const {
    return lemma_failures.empty() && error.empty() && ledger_holds && degree_identity && easy_tilde &&
           pfaffians_nonzero;
}

bool SweepResult::all_passed() const { return failures() == 0; }

int SweepResult::failures() const {
    return static_cast<int>(std::count_if(cases.begin(), cases.end(), [](const SweepCase& c) { return !c.passed(); }));
}

int thread_budget() {
    if (const char* env = std::getenv("PC_THREADS")) {
        char* end = nullptr;
        const long n = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && n > 0) return static_cast<int>(n);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

SweepCase run_case(const RestrictedRootSystem& sys, const Cascade& cascade, const ParabolicSubset& phi) {
    SweepCase out;
    out.phi = phi;
    try {
        const PhiDecomposition d = decompose(sys, cascade, phi);
        out.groups = static_cast<int>(d.groups.size());
        out.lemma_failures = verify_structure(sys, cascade, d).failures();

        const InvarianceReport inv = invariance_class(sys, cascade, d);
        out.non_invariant_groups = static_cast<int>(
            std::count(inv.per_group.begin(), inv.per_group.end(), Invariance::not_invariant));

        // weights() throws StructureViolation on a trace mismatch
        out.ledger_holds = weights(sys, cascade, d).ledger_holds();

        if (sys.is_split() && sys.type().family != Family::BC) {
            out.density_computed = true;
            try {
                const PlancherelData data = plancherel_data(sys, cascade, d);
                out.degree_identity = data.degree_identity_holds();
            } catch (const StructureViolation& e) {
                out.pfaffians_nonzero = false;
                out.error = e.what();
                return out;
            }
            const auto table = build_constants(sys);
            for (size_t j = 0; j < d.groups.size(); ++j)
                if (inv.per_group[j] == Invariance::not_invariant &&
                    !easy_tilde_check(sys, cascade, d, *table, static_cast<int>(j)))
                    out.easy_tilde = false;
        }
    } catch (const std::exception& e) {
        out.error = e.what();
    }
    return out;
}

}  // namespace

SweepResult sweep(const RootSystemType& type, int threads) {
    const RestrictedRootSystem sys = build_system(type);
    const Cascade cascade = build_cascade(sys);
    if (sys.is_split() && type.family != Family::BC) build_constants(sys);  // warm the shared cache

    const unsigned total = 1u << type.rank;
    SweepResult result;
    result.type = type;
    result.cases.resize(total);

    std::atomic<unsigned> next{0};
    auto worker = [&] {
        for (unsigned m = next++; m < total; m = next++)
            result.cases[m] = run_case(sys, cascade, ParabolicSubset::from_mask(type.rank, m));
    };
    const int n = std::clamp(threads, 1, static_cast<int>(total));
    std::vector<std::jthread> pool;
    for (int t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    pool.clear();
    return result;
}

}  // namespace pcascade
