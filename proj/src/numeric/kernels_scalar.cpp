#include <cmath>
#include <numbers>

#include "pcascade/numeric/kernels.hpp"

namespace pcascade::numeric::scalar {

void phase_sum(const double* g_re, const double* g_im, std::size_t nt, double t0, double dt, const double* freqs,
               std::size_t nf, double* out_re, double* out_im) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    for (std::size_t j = 0; j < nf; ++j) {
        const double w = two_pi * freqs[j];
        const double s_re = std::cos(w * dt), s_im = std::sin(w * dt);
        double acc_re = 0.0, acc_im = 0.0;
        for (std::size_t k0 = 0; k0 < nt; k0 += kReseedPeriod) {
            const double t = t0 + static_cast<double>(k0) * dt;
            double p_re = std::cos(w * t), p_im = std::sin(w * t);
            const std::size_t end = k0 + kReseedPeriod < nt ? k0 + kReseedPeriod : nt;
            for (std::size_t k = k0; k < end; ++k) {
                acc_re += g_re[k] * p_re - g_im[k] * p_im;
                acc_im += g_re[k] * p_im + g_im[k] * p_re;
                const double n_re = p_re * s_re - p_im * s_im;
                p_im = p_re * s_im + p_im * s_re;
                p_re = n_re;
            }
        }
        out_re[j] = acc_re;
        out_im[j] = acc_im;
    }
}

double weighted_norm2(const double* re, const double* im, const double* w, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += w[i] * (re[i] * re[i] + im[i] * im[i]);
    return s;
}

}  // namespace pcascade::numeric::scalar
