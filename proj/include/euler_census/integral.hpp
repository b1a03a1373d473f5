#pragma once
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "euler_census/graph.hpp"
#include "euler_census/matrix.hpp"

namespace ec {

struct IntegralModel {
    Graph g;
    double epsilon = 0.0;
    Matrix Q;      // float Laplacian
    Matrix Q_hat;  // Q + J
    Matrix W;      // Q_hat^{-1}
    Matrix chol;   // lower L with L L^T = Q_hat
    std::vector<double> alpha;        // W_jj
    std::vector<double> beta;         // Q alpha
    std::vector<double> theta_scale;  // sqrt((d_k+1)/2)
    double box_radius = 0.0;          // n^{-1/2+epsilon}
    double log_det_qhat = 0.0;
};

struct IntegralResult {
    std::complex<double> value;  // Int (MC) or S (quadrature)
    double std_error = 0.0;      // hypot of the two components, MC only
    double std_error_re = 0.0;
    double std_error_im = 0.0;
    std::uint64_t samples = 0;
    double ln_ec_implied = 0.0;
    std::string method;  // "monte-carlo" | "quadrature"
    double elapsed_ms = 0.0;
};

struct McOptions {
    // The perturbation terms of the exponent; the Gaussian normalization
    // check disables all three.
    bool include_beta = true;
    bool include_quartic = true;
    bool include_r = true;
    bool infinite_box = false;  // replaces the U_n(n^{-1/2+eps}) indicator by 1
    // gaussian: xi ~ N(0, Q_hat^{-1}) via the Cholesky factor (the Gaussian
    // factor of the integrand cancels into the proposal).
    // theta_diagonal: theta_k ~ N(0,1), xi_k = theta_k / theta_scale_k; the
    // Gaussian factor stays in the weight, which makes the normalization
    // identity a real statistical check. Finite weight variance needs
    // lambda_min(A) > 1/4 for A_jk = Q_hat_jk / sqrt((d_j+1)(d_k+1)).
    enum class Proposal { gaussian, theta_diagonal } proposal = Proposal::gaussian;
};

IntegralModel build_model(const Graph& g, double epsilon);

// R(xi) = tr(L W L W), L = diag(Q xi).
double r_quadratic(const IntegralModel& m, const std::vector<double>& xi);

// Exponent of Int: i xi.beta - xi.Q_hat.xi/2 - sum_edges Delta^4/12 + R/2.
std::complex<double> integrand_log_int(const IntegralModel& m, const std::vector<double>& xi);

// Diagnostic membership test for the wrap-around region V_0.
bool v0_contains(const IntegralModel& m, const std::vector<double>& xi);

// Importance-sampled Int over the box, with the EC value implied through the
// S_0 and EulS chains. Deterministic in (seed), for any worker count.
IntegralResult mc_estimate_int(const IntegralModel& m, std::uint64_t n_samples,
                               std::uint64_t seed, const McOptions& opts = {},
                               unsigned workers = 0);

// Tensor midpoint quadrature of S over U_n(pi/2), n <= 4, refined by grid
// doubling until the relative change is < 1e-3 (at most 4 doublings).
IntegralResult quadrature_S(const Graph& g, int grid_points_per_axis, unsigned workers = 0);

// One evaluation of the tensor rule at a fixed grid size; reduced=true uses
// the diagonal-translation symmetry to sum a single slice times N (exact
// rearrangement of the same sum, tested against reduced=false).
std::complex<double> quadrature_eval(const Graph& g, int grid_points_per_axis,
                                     bool reduced = true, unsigned workers = 0);

// The quadrature integrand at one point: prod cos * det(Q_hat + iB)/n^2.
std::complex<double> quadrature_integrand(const Graph& g, const std::vector<double>& xi);

}  // namespace ec
