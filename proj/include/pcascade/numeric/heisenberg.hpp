#pragma once

#include <string>
#include <vector>

namespace pcascade::numeric {

/// Hermite function h_n(t) = (2^n n! sqrt(pi))^{-1/2} H_n(t) e^{-t^2/2}, orthonormal on R.
double hermite_function(int n, double t);
/// h_0..h_nmax at t.
std::vector<double> hermite_functions(int nmax, double t);

/// Vector of L^2(R) given by real coefficients in the Hermite basis.
struct HermiteVector {
    std::vector<double> coeffs;

    double operator()(double t) const;
    /// Exact, from the coefficients.
    double norm2() const;
    int max_order() const { return static_cast<int>(coeffs.size()) - 1; }
};

/**
 * Schroedinger model of a layer with d pairs: for lambda on the center, the pair k acts on
 * L^2(R) with central character structure[k] * lambda. u and v are tensor products of
 * one Hermite vector per pair.
 *
 * The coefficient of one pair, with e^{2 pi i} conventions, is
 *   f(x, y) = e^{pi i mu x y} int conj(u(t)) v(t + x) e^{2 pi i mu y t} dt,  mu = N lambda.
 */
struct SchroedingerModel {
    double lambda = 1.0;
    std::vector<int> structure{1};
    std::vector<HermiteVector> u{{{1.0}}};
    std::vector<HermiteVector> v{{{1.0}}};
};

struct QuadratureConfig {
    /// Points per dimension at the coarse level; the refined level doubles it.
    int grid = 128;
    /// Allowed relative disagreement between the two levels.
    double tol = 1e-6;
    /// Multiplies the outer constant c of the inversion formula (1 for the true formula).
    double outer_constant_scale = 1.0;
};

struct NormCheck {
    double numeric = 0, predicted = 0, rel_err = 0;
    /// |coarse - refined| / |refined|
    double refinement_diff = 0;
    int grid = 0;
};

/// Integrates |f_{u,v}|^2 over N/Z and compares with ||u||^2 ||v||^2 / |P(lambda)|.
/// Throws QuadratureFailure when the two grid levels disagree beyond config.tol.
NormCheck coefficient_norm_check(const SchroedingerModel& model, const QuadratureConfig& config);

enum class InversionCase { h3, a3 };
InversionCase parse_inversion_case(const std::string& name);
std::string case_name(InversionCase c);

struct InversionResult {
    double lhs = 0, rhs = 0, rhs_imag = 0, rel_err = 0, refinement_diff = 0;
    int grid = 0;
    /// Constant from the stepwise decomposition, used inside Theta.
    long long c = 0;
    /// Positive roots of the nilradical, coordinate order of x and the widths.
    std::vector<std::vector<int>> coordinates;
};

/**
 * Fourier inversion f(x) = c int |P(lambda)| Theta_lambda(r_x f) d lambda on the minimal
 * nilradical of A_2 (Heisenberg) or A_3, for f(exp xi) = prod_k exp(-xi_k^2 / (2 s_k^2)).
 * x is given in exponential coordinates (one entry per positive root) and must be central.
 * Throws UnsupportedPoint for non-central x and QuadratureFailure on grid disagreement.
 */
InversionResult inversion_check(InversionCase which, const std::vector<double>& widths, const std::vector<double>& x,
                                const QuadratureConfig& config);

}  // namespace pcascade::numeric
