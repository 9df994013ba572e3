#include <doctest.h>

#include <complex>
#include <numbers>
#include <random>

#include "pcascade/errors.hpp"
#include "pcascade/numeric/heisenberg.hpp"
#include "pcascade/numeric/kernels.hpp"
#include "support/oracles.hpp"

using namespace pcascade;
using namespace pcascade::numeric;

namespace {

struct PhaseInput {
    std::vector<double> g_re, g_im, freqs;
    double t0 = 0, dt = 0;
};

PhaseInput random_input(std::mt19937& rng, size_t nt, size_t nf) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    PhaseInput in;
    for (size_t k = 0; k < nt; ++k) {
        in.g_re.push_back(u(rng));
        in.g_im.push_back(u(rng));
    }
    for (size_t j = 0; j < nf; ++j) in.freqs.push_back(3.0 * u(rng));
    in.t0 = -4.0 + u(rng);
    in.dt = 8.0 / static_cast<double>(nt + 1);
    return in;
}

// Direct evaluation with std::polar for every sample.
std::vector<std::complex<double>> phase_sum_direct(const PhaseInput& in) {
    std::vector<std::complex<double>> out;
    for (double f : in.freqs) {
        std::complex<double> s = 0;
        for (size_t k = 0; k < in.g_re.size(); ++k) {
            const double t = in.t0 + static_cast<double>(k) * in.dt;
            s += std::complex<double>(in.g_re[k], in.g_im[k]) * std::polar(1.0, 2 * std::numbers::pi * f * t);
        }
        out.push_back(s);
    }
    return out;
}

using PhaseFn = void (*)(const double*, const double*, std::size_t, double, double, const double*, std::size_t, double*,
                         double*);

std::vector<std::complex<double>> run(PhaseFn fn, const PhaseInput& in) {
    std::vector<double> re(in.freqs.size()), im(in.freqs.size());
    fn(in.g_re.data(), in.g_im.data(), in.g_re.size(), in.t0, in.dt, in.freqs.data(), in.freqs.size(), re.data(),
       im.data());
    std::vector<std::complex<double>> out;
    for (size_t j = 0; j < re.size(); ++j) out.emplace_back(re[j], im[j]);
    return out;
}

double max_diff(const std::vector<std::complex<double>>& a, const std::vector<std::complex<double>>& b) {
    double m = 0;
    for (size_t j = 0; j < a.size(); ++j) m = std::max(m, std::abs(a[j] - b[j]));
    return m;
}

SchroedingerModel single_pair(double lambda, int structure, std::vector<double> u, std::vector<double> v) {
    SchroedingerModel m;
    m.lambda = lambda;
    m.structure = {structure};
    m.u = {{std::move(u)}};
    m.v = {{std::move(v)}};
    return m;
}

}  // namespace

TEST_CASE("scalar phase sums match direct evaluation") {
    std::mt19937 rng(41);
    for (size_t nt : {1u, 7u, 64u, 65u, 300u}) {
        const auto in = random_input(rng, nt, 9);
        CHECK(max_diff(run(scalar::phase_sum, in), phase_sum_direct(in)) < 1e-10 * static_cast<double>(nt));
    }
}

TEST_CASE("avx2 kernels agree with the scalar reference") {
    if (!avx2_available()) {
        MESSAGE("avx2 unavailable on this machine");
        return;
    }
    std::mt19937 rng(43);
    // frequency counts around the vector width exercise the remainder loops
    for (size_t nf : {1u, 2u, 3u, 4u, 5u, 7u, 8u, 13u})
        for (size_t nt : {1u, 63u, 64u, 129u}) {
            const auto in = random_input(rng, nt, nf);
            CHECK(max_diff(run(avx2::phase_sum, in), run(scalar::phase_sum, in)) < 1e-11 * static_cast<double>(nt));
        }
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (size_t n : {0u, 1u, 3u, 4u, 5u, 17u, 1000u}) {
        std::vector<double> re(n), im(n), w(n);
        for (size_t i = 0; i < n; ++i) {
            re[i] = u(rng);
            im[i] = u(rng);
            w[i] = std::abs(u(rng));
        }
        const double a = scalar::weighted_norm2(re.data(), im.data(), w.data(), n);
        const double b = avx2::weighted_norm2(re.data(), im.data(), w.data(), n);
        CHECK(b == doctest::Approx(a).epsilon(1e-13));
        double direct = 0;
        for (size_t i = 0; i < n; ++i) direct += w[i] * (re[i] * re[i] + im[i] * im[i]);
        CHECK(a == doctest::Approx(direct).epsilon(1e-13));
    }
}

TEST_CASE("dispatch honours the override") {
    set_isa_override(Isa::scalar);
    CHECK(active_isa() == Isa::scalar);
    set_isa_override(Isa::avx2);
    CHECK(active_isa() == (avx2_available() ? Isa::avx2 : Isa::scalar));
    set_isa_override(std::nullopt);
    CHECK(active_isa() == (avx2_available() ? Isa::avx2 : Isa::scalar));

    // the norm check gives the same answer on either kernel set
    const auto model = single_pair(0.7, 1, {1.0, 0.5}, {0.3, 0.0, 1.0});
    set_isa_override(Isa::scalar);
    const double a = coefficient_norm_check(model, {}).numeric;
    set_isa_override(Isa::avx2);
    const double b = coefficient_norm_check(model, {}).numeric;
    set_isa_override(std::nullopt);
    CHECK(b == doctest::Approx(a).epsilon(1e-10));
}

TEST_CASE("Hermite functions") {
    for (int n = 0; n <= 12; ++n)
        for (double t : {-3.1, -1.0, 0.0, 0.25, 2.0, 4.5}) {
            CAPTURE(n);
            CAPTURE(t);
            CHECK(hermite_function(n, t) == doctest::Approx(oracle::hermite_fn(n, t)).epsilon(1e-10));
        }
    // orthonormality by a fine Riemann sum
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; n <= 4; ++n) {
            double s = 0;
            const double h = 0.01;
            for (double t = -12; t <= 12; t += h) s += hermite_function(m, t) * hermite_function(n, t) * h;
            CHECK(s == doctest::Approx(m == n ? 1.0 : 0.0).epsilon(1e-8).scale(1.0));
        }
    const HermiteVector v{{1.0, -2.0, 0.5}};
    CHECK(v.norm2() == doctest::Approx(5.25));
    CHECK(v(0.3) == doctest::Approx(oracle::hermite_fn(0, 0.3) - 2 * oracle::hermite_fn(1, 0.3) + 0.5 * oracle::hermite_fn(2, 0.3)));
}

TEST_CASE("ground-state coefficient norm against the closed form") {
    for (double lambda : {1.0, 0.5, -2.0, 3.0}) {
        const auto r = coefficient_norm_check(single_pair(lambda, 1, {1.0}, {1.0}), {});
        CHECK(r.numeric == doctest::Approx(oracle::gaussian_coefficient_norm(lambda)).epsilon(1e-9));
        CHECK(r.rel_err < 1e-6);
    }
}

TEST_CASE("coefficient norms for several configurations") {
    std::vector<SchroedingerModel> models;
    models.push_back(single_pair(1.3, 1, {0.0, 1.0}, {1.0, 0.0, 0.5}));
    models.push_back(single_pair(-0.8, 2, {1.0, 1.0}, {0.2, -0.4}));
    SchroedingerModel two;
    two.lambda = 0.9;
    two.structure = {1, 2};
    two.u = {{{1.0}}, {{0.5, 0.5}}};
    two.v = {{{0.0, 1.0}}, {{1.0}}};
    models.push_back(two);
    SchroedingerModel three;
    three.lambda = -1.7;
    three.structure = {1, 1, 1};
    three.u = {{{1.0}}, {{0.0, 0.0, 1.0}}, {{1.0, -1.0}}};
    three.v = {{{1.0}}, {{1.0}}, {{0.0, 2.0}}};
    models.push_back(three);
    for (const auto& m : models) {
        const auto r = coefficient_norm_check(m, {});
        double predicted = 1;
        for (size_t k = 0; k < m.structure.size(); ++k)
            predicted *= m.u[k].norm2() * m.v[k].norm2() / std::abs(m.structure[k] * m.lambda);
        CHECK(r.predicted == doctest::Approx(predicted).epsilon(1e-14));
        CHECK(r.rel_err <= 1e-6);
        CHECK(r.refinement_diff <= 1e-6);
    }
}

TEST_CASE("coefficient norm errors") {
    CHECK_THROWS_AS(coefficient_norm_check(single_pair(0.0, 1, {1.0}, {1.0}), {}), SingularParameter);
    auto bad = single_pair(1.0, 1, {1.0}, {1.0});
    bad.structure = {1, 1};
    CHECK_THROWS_AS(coefficient_norm_check(bad, {}), ArityError);
    QuadratureConfig coarse;
    coarse.grid = 4;
    CHECK_THROWS_AS(coefficient_norm_check(single_pair(0.2, 1, {0, 0, 0, 1}, {0, 0, 1}), coarse), QuadratureFailure);
}

TEST_CASE("inversion on the Heisenberg group") {
    QuadratureConfig cfg;
    cfg.tol = 1e-4;
    const auto r = inversion_check(InversionCase::h3, {}, {}, cfg);
    CHECK(r.c == 2);
    CHECK(r.lhs == doctest::Approx(1.0));
    CHECK(r.rel_err <= 1e-4);
    CHECK(std::abs(r.rhs_imag) <= 1e-8);
    REQUIRE(r.coordinates.size() == 3);

    // shift along the center with non-unit widths
    std::vector<double> x(3, 0.0);
    size_t center = 0;
    for (size_t k = 0; k < 3; ++k)
        if (r.coordinates[k] == std::vector<int>{1, 1}) center = k;
    x[center] = 0.6;
    const auto s = inversion_check(InversionCase::h3, {1.2, 0.8, 1.5}, x, cfg);
    CHECK(s.lhs == doctest::Approx(std::exp(-0.5 * 0.16)));
    CHECK(s.rel_err <= 1e-4);
}

TEST_CASE("inversion on the A3 minimal nilradical") {
    QuadratureConfig cfg;
    cfg.tol = 1e-3;
    const auto r = inversion_check(InversionCase::a3, {}, {}, cfg);
    CHECK(r.c == 8);
    CHECK(r.rel_err <= 1e-3);
    CHECK(r.coordinates.size() == 6);
}

TEST_CASE("a wrong outer constant is detected") {
    for (auto which : {InversionCase::h3, InversionCase::a3}) {
        QuadratureConfig cfg;
        cfg.tol = which == InversionCase::h3 ? 1e-4 : 1e-3;
        cfg.outer_constant_scale = 2.0;
        const auto r = inversion_check(which, {}, {}, cfg);
        CHECK(r.rel_err >= 10 * cfg.tol);
    }
}

TEST_CASE("inversion argument validation") {
    QuadratureConfig cfg;
    cfg.tol = 1e-4;
    const auto base = inversion_check(InversionCase::h3, {}, {}, cfg);
    for (size_t k = 0; k < 3; ++k) {
        if (base.coordinates[k] == std::vector<int>{1, 1}) continue;
        std::vector<double> x(3, 0.0);
        x[k] = 0.5;
        CHECK_THROWS_AS(inversion_check(InversionCase::h3, {}, x, cfg), UnsupportedPoint);
    }
    CHECK_THROWS_AS(inversion_check(InversionCase::h3, {1.0}, {}, cfg), ArityError);
    CHECK_THROWS_AS(inversion_check(InversionCase::h3, {1.0, -1.0, 1.0}, {}, cfg), UsageError);
    CHECK_THROWS_AS(parse_inversion_case("b2"), UsageError);
    CHECK(parse_inversion_case("a3") == InversionCase::a3);
    cfg.grid = 4;
    CHECK_THROWS_AS(inversion_check(InversionCase::h3, {}, {}, cfg), QuadratureFailure);
}
