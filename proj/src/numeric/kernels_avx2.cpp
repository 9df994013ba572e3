#include <immintrin.h>

#include <cmath>
#include <numbers>

#include "pcascade/numeric/kernels.hpp"

namespace pcascade::numeric::avx2 {

namespace {

double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

}  // namespace

// Four frequencies per register; the sample loop is shared by the lanes.
void phase_sum(const double* g_re, const double* g_im, std::size_t nt, double t0, double dt, const double* freqs,
               std::size_t nf, double* out_re, double* out_im) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    std::size_t j = 0;
    for (; j + 4 <= nf; j += 4) {
        alignas(32) double w[4], s_re[4], s_im[4], p_re[4], p_im[4];
        for (int l = 0; l < 4; ++l) {
            w[l] = two_pi * freqs[j + static_cast<std::size_t>(l)];
            s_re[l] = std::cos(w[l] * dt);
            s_im[l] = std::sin(w[l] * dt);
        }
        const __m256d vs_re = _mm256_load_pd(s_re), vs_im = _mm256_load_pd(s_im);
        __m256d acc_re = _mm256_setzero_pd(), acc_im = _mm256_setzero_pd();
        for (std::size_t k0 = 0; k0 < nt; k0 += kReseedPeriod) {
            const double t = t0 + static_cast<double>(k0) * dt;
            for (int l = 0; l < 4; ++l) {
                p_re[l] = std::cos(w[l] * t);
                p_im[l] = std::sin(w[l] * t);
            }
            __m256d vp_re = _mm256_load_pd(p_re), vp_im = _mm256_load_pd(p_im);
            const std::size_t end = k0 + kReseedPeriod < nt ? k0 + kReseedPeriod : nt;
            for (std::size_t k = k0; k < end; ++k) {
                const __m256d gr = _mm256_broadcast_sd(g_re + k);
                const __m256d gi = _mm256_broadcast_sd(g_im + k);
                acc_re = _mm256_fmadd_pd(gr, vp_re, acc_re);
                acc_re = _mm256_fnmadd_pd(gi, vp_im, acc_re);
                acc_im = _mm256_fmadd_pd(gr, vp_im, acc_im);
                acc_im = _mm256_fmadd_pd(gi, vp_re, acc_im);
                const __m256d n_re = _mm256_fmsub_pd(vp_re, vs_re, _mm256_mul_pd(vp_im, vs_im));
                vp_im = _mm256_fmadd_pd(vp_re, vs_im, _mm256_mul_pd(vp_im, vs_re));
                vp_re = n_re;
            }
        }
        _mm256_storeu_pd(out_re + j, acc_re);
        _mm256_storeu_pd(out_im + j, acc_im);
    }
    if (j < nf) scalar::phase_sum(g_re, g_im, nt, t0, dt, freqs + j, nf - j, out_re + j, out_im + j);
}

double weighted_norm2(const double* re, const double* im, const double* w, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d r = _mm256_loadu_pd(re + i), m = _mm256_loadu_pd(im + i);
        const __m256d mag = _mm256_fmadd_pd(r, r, _mm256_mul_pd(m, m));
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(w + i), mag, acc);
    }
    double s = hsum(acc);
    for (; i < n; ++i) s += w[i] * (re[i] * re[i] + im[i] * im[i]);
    return s;
}

}  // namespace pcascade::numeric::avx2
