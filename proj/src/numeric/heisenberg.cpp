#include "pcascade/numeric/heisenberg.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "pcascade/density.hpp"
#include "pcascade/errors.hpp"
#include "pcascade/numeric/kernels.hpp"

namespace pcascade::numeric {

namespace {

struct Grid {
    std::vector<double> nodes, weights;
    double start = 0, step = 0;
};

// Trapezoid nodes on [a, b] with n points.
Grid trapezoid(double a, double b, int n) {
    Grid g;
    g.start = a;
    g.step = (b - a) / (n - 1);
    for (int i = 0; i < n; ++i) {
        g.nodes.push_back(a + i * g.step);
        g.weights.push_back(i == 0 || i == n - 1 ? g.step / 2 : g.step);
    }
    return g;
}

// Midpoint nodes on [a, b] with n cells; an even n keeps 0 off the grid for symmetric intervals.
Grid midpoint(double a, double b, int n) {
    Grid g;
    g.step = (b - a) / n;
    g.start = a + g.step / 2;
    for (int i = 0; i < n; ++i) {
        g.nodes.push_back(g.start + i * g.step);
        g.weights.push_back(g.step);
    }
    return g;
}

double relative(double a, double b) { return std::abs(a - b) / std::abs(b); }

// int |f(x, y)|^2 dx dy for one pair with central character mu.
double pair_norm(const HermiteVector& u, const HermiteVector& v, double mu, int n) {
    const int nmax = std::max(u.max_order(), v.max_order());
    const double T = std::sqrt(2.0 * nmax + 1.0) + 8.0;
    const double omega = T / std::numbers::pi;
    const Grid t = trapezoid(-T, T, n);
    const Grid x = trapezoid(-2 * T, 2 * T, n);
    const Grid y = trapezoid(-omega / std::abs(mu), omega / std::abs(mu), n);

    std::vector<double> freqs(y.nodes.size());
    for (size_t j = 0; j < freqs.size(); ++j) freqs[j] = mu * y.nodes[j];
    std::vector<double> ut(t.nodes.size());
    for (size_t i = 0; i < ut.size(); ++i) ut[i] = u(t.nodes[i]);

    std::vector<double> g_re(t.nodes.size()), g_im(t.nodes.size(), 0.0);
    std::vector<double> f_re(freqs.size()), f_im(freqs.size());
    double total = 0.0;
    for (size_t a = 0; a < x.nodes.size(); ++a) {
        for (size_t i = 0; i < g_re.size(); ++i) g_re[i] = t.weights[i] * ut[i] * v(t.nodes[i] + x.nodes[a]);
        phase_sum(g_re.data(), g_im.data(), g_re.size(), t.start, t.step, freqs.data(), freqs.size(), f_re.data(),
                  f_im.data());
        total += x.weights[a] * weighted_norm2(f_re.data(), f_im.data(), y.weights.data(), freqs.size());
    }
    return total;
}

double evaluate_double(const Polynomial& p, const std::vector<double>& point) {
    double s = 0.0;
    for (const auto& [e, c] : p.terms()) {
        double term = c.convert_to<double>();
        for (size_t i = 0; i < e.size(); ++i) term *= std::pow(point[i], e[i]);
        s += term;
    }
    return s;
}

struct InversionSetup {
    RestrictedRootSystem sys;
    Cascade cascade;
    PhiDecomposition decomp;
    PlancherelData data;
    long long c = 0;
    std::vector<bool> central, is_z;
    std::vector<size_t> z_order;  // coordinate of each density variable
};

InversionSetup setup(InversionCase which) {
    InversionSetup s;
    const int rank = which == InversionCase::h3 ? 2 : 3;
    s.sys = build_system({Family::A, rank});
    s.cascade = build_cascade(s.sys);
    s.decomp = decompose(s.sys, s.cascade, ParabolicSubset::empty(rank));
    s.data = plancherel_data(s.sys, s.cascade, s.decomp);
    s.c = stepwise_constant(s.decomp).value().convert_to<long long>();
    const int m = s.sys.size();
    s.central.assign(static_cast<size_t>(m), true);
    for (RootId a = 0; a < m; ++a)
        for (RootId b = 0; b < m; ++b)
            if (s.sys.sum_positive(a, b)) s.central[static_cast<size_t>(a)] = false;
    s.is_z.assign(static_cast<size_t>(m), false);
    for (RootId z : s.data.variable_roots) {
        s.is_z[static_cast<size_t>(z)] = true;
        s.z_order.push_back(static_cast<size_t>(z));
    }
    return s;
}

// One grid level of the right-hand side.
std::complex<double> inversion_rhs(const InversionSetup& s, const std::vector<double>& widths,
                                   const std::vector<double>& x, int n, double outer_scale) {
    const size_t dim = widths.size();
    // 1-D transforms of g_k(xi) = exp(-(xi + x_k)^2 / (2 s_k^2)) with kernel e^{-2 pi i eta xi}
    std::vector<std::vector<std::complex<double>>> zhat(dim);
    std::vector<Grid> zgrid(dim);
    std::complex<double> v_part = 1.0;
    for (size_t k = 0; k < dim; ++k) {
        const double sk = widths[k];
        const Grid xi = trapezoid(-x[k] - 10 * sk, -x[k] + 10 * sk, n);
        std::vector<double> g_re(xi.nodes.size()), g_im(xi.nodes.size(), 0.0);
        for (size_t i = 0; i < g_re.size(); ++i) {
            const double u = (xi.nodes[i] + x[k]) / sk;
            g_re[i] = xi.weights[i] * std::exp(-0.5 * u * u);
        }
        const double E = 2.0 / sk;
        const Grid eta = s.is_z[k] ? midpoint(-E, E, n) : trapezoid(-E, E, n);
        std::vector<double> freqs(eta.nodes.size());
        for (size_t j = 0; j < freqs.size(); ++j) freqs[j] = -eta.nodes[j];
        std::vector<double> f_re(freqs.size()), f_im(freqs.size());
        phase_sum(g_re.data(), g_im.data(), g_re.size(), xi.start, xi.step, freqs.data(), freqs.size(), f_re.data(),
                  f_im.data());
        if (s.is_z[k]) {
            for (size_t j = 0; j < freqs.size(); ++j) zhat[k].emplace_back(f_re[j], f_im[j]);
            zgrid[k] = eta;
        } else {
            // integral over the orbit direction nu_k
            std::complex<double> acc = 0.0;
            for (size_t j = 0; j < freqs.size(); ++j) acc += eta.weights[j] * std::complex<double>(f_re[j], f_im[j]);
            v_part *= acc;
        }
    }

    const size_t nz = s.z_order.size();
    std::vector<size_t> idx(nz, 0);
    std::vector<double> lambda(nz);
    const double c = static_cast<double>(s.c);
    std::complex<double> total = 0.0;
    for (;;) {
        double w = 1.0;
        std::complex<double> zprod = 1.0;
        for (size_t q = 0; q < nz; ++q) {
            const size_t k = s.z_order[q];
            lambda[q] = zgrid[k].nodes[idx[q]];
            w *= zgrid[k].weights[idx[q]];
            zprod *= zhat[k][idx[q]];
        }
        const double P = std::abs(evaluate_double(s.data.density, lambda));
        const std::complex<double> theta = v_part * zprod / (c * P);
        total += w * P * theta;
        size_t q = 0;
        while (q < nz && ++idx[q] == zgrid[s.z_order[q]].nodes.size()) idx[q++] = 0;
        if (q == nz) break;
    }
    return outer_scale * c * total;
}

}  // namespace

std::vector<double> hermite_functions(int nmax, double t) {
    std::vector<double> h(static_cast<size_t>(nmax) + 1);
    h[0] = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * t * t);
    if (nmax >= 1) h[1] = std::sqrt(2.0) * t * h[0];
    for (int n = 1; n < nmax; ++n)
        h[static_cast<size_t>(n) + 1] = std::sqrt(2.0 / (n + 1)) * t * h[static_cast<size_t>(n)] -
                                        std::sqrt(static_cast<double>(n) / (n + 1)) * h[static_cast<size_t>(n) - 1];
    return h;
}

double hermite_function(int n, double t) { return hermite_functions(n, t).back(); }

double HermiteVector::operator()(double t) const {
    if (coeffs.empty()) return 0.0;
    const auto h = hermite_functions(max_order(), t);
    double s = 0.0;
    for (size_t k = 0; k < coeffs.size(); ++k) s += coeffs[k] * h[k];
    return s;
}

double HermiteVector::norm2() const {
    double s = 0.0;
    for (double c : coeffs) s += c * c;
    return s;
}

NormCheck coefficient_norm_check(const SchroedingerModel& model, const QuadratureConfig& config) {
    if (model.lambda == 0.0) throw SingularParameter("lambda must be nonzero");
    const size_t d = model.structure.size();
    if (model.u.size() != d || model.v.size() != d) throw ArityError("one u and one v per pair are required");
    double coarse = 1.0, fine = 1.0, predicted = 1.0;
    for (size_t k = 0; k < d; ++k) {
        const double mu = model.structure[k] * model.lambda;
        coarse *= pair_norm(model.u[k], model.v[k], mu, config.grid);
        fine *= pair_norm(model.u[k], model.v[k], mu, 2 * config.grid);
        predicted *= model.u[k].norm2() * model.v[k].norm2() / std::abs(mu);
    }
    NormCheck r;
    r.numeric = fine;
    r.predicted = predicted;
    r.rel_err = relative(fine, predicted);
    r.refinement_diff = relative(coarse, fine);
    r.grid = 2 * config.grid;
    if (r.refinement_diff > config.tol)
        throw QuadratureFailure("grid levels " + std::to_string(config.grid) + " and " + std::to_string(2 * config.grid) +
                                " disagree by " + std::to_string(r.refinement_diff));
    return r;
}

InversionCase parse_inversion_case(const std::string& name) {
    if (name == "h3") return InversionCase::h3;
    if (name == "a3") return InversionCase::a3;
    throw UsageError("unknown numeric case '" + name + "'");
}

std::string case_name(InversionCase c) { return c == InversionCase::h3 ? "h3" : "a3"; }

InversionResult inversion_check(InversionCase which, const std::vector<double>& widths_in, const std::vector<double>& x_in,
                                const QuadratureConfig& config) {
    const InversionSetup s = setup(which);
    const size_t dim = static_cast<size_t>(s.sys.size());
    std::vector<double> widths = widths_in.empty() ? std::vector<double>(dim, 1.0) : widths_in;
    std::vector<double> x = x_in.empty() ? std::vector<double>(dim, 0.0) : x_in;
    if (widths.size() != dim || x.size() != dim)
        throw ArityError("expected " + std::to_string(dim) + " coordinates for " + case_name(which));
    for (double w : widths)
        if (!(w > 0)) throw UsageError("Gaussian widths must be positive");
    for (size_t k = 0; k < dim; ++k)
        if (x[k] != 0.0 && !s.central[k])
            throw UnsupportedPoint("x has a component along " + coords_to_string(s.sys.coords(static_cast<RootId>(k))) +
                                   ", which is not central");

    InversionResult r;
    for (RootId a = 0; a < s.sys.size(); ++a) r.coordinates.push_back(s.sys.coords(a));
    r.c = s.c;
    r.lhs = 1.0;
    for (size_t k = 0; k < dim; ++k) r.lhs *= std::exp(-0.5 * (x[k] / widths[k]) * (x[k] / widths[k]));
    const auto coarse = inversion_rhs(s, widths, x, config.grid, config.outer_constant_scale);
    const auto fine = inversion_rhs(s, widths, x, 2 * config.grid, config.outer_constant_scale);
    r.rhs = fine.real();
    r.rhs_imag = fine.imag();
    r.grid = 2 * config.grid;
    r.refinement_diff = std::abs(coarse - fine) / std::abs(fine);
    r.rel_err = relative(r.rhs, r.lhs);
    if (r.refinement_diff > config.tol)
        throw QuadratureFailure("grid levels " + std::to_string(config.grid) + " and " + std::to_string(2 * config.grid) +
                                " disagree by " + std::to_string(r.refinement_diff));
    return r;
}

}  // namespace pcascade::numeric
