// Times the scalar and AVX2 quadrature kernels on the same inputs.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "pcascade/numeric/kernels.hpp"

namespace nk = pcascade::numeric;

namespace {

using PhaseFn = void (*)(const double*, const double*, std::size_t, double, double, const double*, std::size_t, double*,
                         double*);

double time_ms(PhaseFn fn, const std::vector<double>& re, const std::vector<double>& im, const std::vector<double>& f,
               std::vector<double>& out_re, std::vector<double>& out_im, int reps) {
    const auto t0 = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r)
        fn(re.data(), im.data(), re.size(), -8.0, 16.0 / static_cast<double>(re.size()), f.data(), f.size(),
           out_re.data(), out_im.data());
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count() / reps;
}

}  // namespace

int main() {
    std::mt19937 rng(1);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (std::size_t n : {256u, 1024u, 4096u}) {
        std::vector<double> re(n), im(n), f(n), a_re(n), a_im(n), b_re(n), b_im(n);
        for (std::size_t i = 0; i < n; ++i) {
            re[i] = u(rng);
            im[i] = u(rng);
            f[i] = 4.0 * u(rng);
        }
        const int reps = n <= 1024 ? 20 : 3;
        const double ts = time_ms(nk::scalar::phase_sum, re, im, f, a_re, a_im, reps);
        if (!nk::avx2_available()) {
            std::printf("n=%5zu scalar %8.3f ms  (avx2 unavailable)\n", n, ts);
            continue;
        }
        const double tv = time_ms(nk::avx2::phase_sum, re, im, f, b_re, b_im, reps);
        double diff = 0;
        for (std::size_t j = 0; j < n; ++j) diff = std::max({diff, std::abs(a_re[j] - b_re[j]), std::abs(a_im[j] - b_im[j])});
        std::printf("n=%5zu scalar %8.3f ms  avx2 %8.3f ms  speedup %5.2fx  max diff %.2e\n", n, ts, tv, ts / tv, diff);
    }
}
