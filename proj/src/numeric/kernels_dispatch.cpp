#include <atomic>

#include "pcascade/numeric/kernels.hpp"

namespace pcascade::numeric {

namespace {

// -1: detect, otherwise the forced Isa value
std::atomic<int> override_isa{-1};

}  // namespace

bool avx2_available() {
#if defined(__x86_64__) || defined(__i386__)
    static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    return ok;
#else
    return false;
#endif
}

Isa active_isa() {
    const int forced = override_isa.load(std::memory_order_relaxed);
    if (forced == static_cast<int>(Isa::scalar)) return Isa::scalar;
    return avx2_available() ? Isa::avx2 : Isa::scalar;
}

void set_isa_override(std::optional<Isa> isa) {
    override_isa.store(isa ? static_cast<int>(*isa) : -1, std::memory_order_relaxed);
}

void phase_sum(const double* g_re, const double* g_im, std::size_t nt, double t0, double dt, const double* freqs,
               std::size_t nf, double* out_re, double* out_im) {
    if (active_isa() == Isa::avx2)
        avx2::phase_sum(g_re, g_im, nt, t0, dt, freqs, nf, out_re, out_im);
    else
        scalar::phase_sum(g_re, g_im, nt, t0, dt, freqs, nf, out_re, out_im);
}

double weighted_norm2(const double* re, const double* im, const double* w, std::size_t n) {
    return active_isa() == Isa::avx2 ? avx2::weighted_norm2(re, im, w, n) : scalar::weighted_norm2(re, im, w, n);
}

}  // namespace pcascade::numeric
