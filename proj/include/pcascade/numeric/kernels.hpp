#pragma once

#include <cstddef>
#include <optional>

namespace pcascade::numeric {

/// Samples between exact reseeds of the phasor recurrence.
inline constexpr std::size_t kReseedPeriod = 64;

/**
 * out[j] = sum_k g[k] * exp(2 pi i f_j t_k), t_k = t0 + k dt.
 *
 * The phasor is advanced by complex multiplication and recomputed exactly every
 * kReseedPeriod samples. Quadrature weights are folded into g by the caller.
 */
void phase_sum(const double* g_re, const double* g_im, std::size_t nt, double t0, double dt, const double* freqs,
               std::size_t nf, double* out_re, double* out_im);

/// sum_i w_i (re_i^2 + im_i^2)
double weighted_norm2(const double* re, const double* im, const double* w, std::size_t n);

enum class Isa { scalar, avx2 };

bool avx2_available();
/// Kernel set used by the dispatching entry points.
Isa active_isa();
/// Forces a kernel set (tests); std::nullopt restores detection. Requests for an
/// unavailable set fall back to scalar.
void set_isa_override(std::optional<Isa> isa);

namespace scalar {
void phase_sum(const double* g_re, const double* g_im, std::size_t nt, double t0, double dt, const double* freqs,
               std::size_t nf, double* out_re, double* out_im);
double weighted_norm2(const double* re, const double* im, const double* w, std::size_t n);
}  // namespace scalar

namespace avx2 {
void phase_sum(const double* g_re, const double* g_im, std::size_t nt, double t0, double dt, const double* freqs,
               std::size_t nf, double* out_re, double* out_im);
double weighted_norm2(const double* re, const double* im, const double* w, std::size_t n);
}  // namespace avx2

}  // namespace pcascade::numeric
