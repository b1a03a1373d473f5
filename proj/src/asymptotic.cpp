#include "euler_census/asymptotic.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "euler_census/spectral.hpp"

namespace ec {

namespace {
constexpr double kLn2 = 0.6931471805599453094;
constexpr double kLnPi = 1.1447298858494001741;
}  // namespace

double k_ec(const Graph& g) {
    auto d = g.degrees();
    double s = 0.0;
    for (auto [u, v] : g.edges) {
        double diff = 1.0 / (d[u] + 1) - 1.0 / (d[v] + 1);
        s += diff * diff;
    }
    return s == 0.0 ? 0.0 : -0.25 * s;
}

double ln_factorial(int k) {
    if (k < 0) throw std::invalid_argument("ln_factorial: negative argument");
    double s = 0.0;
    for (int i = 2; i <= k; ++i) s += std::log(static_cast<double>(i));
    return s;
}

AsymptoticEstimate ln_ec_estimate(const Graph& g) {
    ValidationReport rep = validate(g);
    if (!rep.all_degrees_even)
        throw std::domain_error("ln_ec_estimate: all degrees must be even");
    if (!rep.is_connected) throw std::domain_error("ln_ec_estimate: graph must be connected");

    const int n = g.n, m = g.m();
    AsymptoticEstimate est;
    est.k_ec = k_ec(g);

    double log_t;
    if (n <= 64) {
        log_t = log_mpz(spanning_tree_count_exact(g));
    } else {
        log_t = spectral_summary(g).log_t;
    }
    double log_pow2 = (m - 0.5 * (n - 1)) * kLn2;
    double log_pi = -0.5 * (n - 1) * kLnPi;
    double log_sqrt_t = 0.5 * log_t;
    double log_fact = 0.0;
    for (int v = 0; v < n; ++v) log_fact += ln_factorial(g.degree(v) / 2 - 1);

    est.ln_prefactor = log_pow2 + log_pi + log_sqrt_t + log_fact;
    est.ln_ec = est.k_ec + est.ln_prefactor;
    est.components = {{"k_ec", est.k_ec},
                      {"log_pow2", log_pow2},
                      {"log_pi_pow", log_pi},
                      {"log_sqrt_t", log_sqrt_t},
                      {"log_degree_factorials", log_fact}};
    return est;
}

double ln_ec_complete(int n) {
    if (n < 3) throw std::invalid_argument("ln_ec_complete: n must be at least 3");
    if (n % 2 == 0) return -std::numeric_limits<double>::infinity();
    return 0.5 * (n - 1) * (n - 1) * kLn2 - 0.5 * (n - 1) * kLnPi +
           0.5 * (n - 2) * std::log(static_cast<double>(n)) +
           n * ln_factorial((n - 1) / 2 - 1);
}

CorrectionConstants correction_constants(const Graph& g) {
    if (!validate(g).is_connected)
        throw std::domain_error("correction_constants: graph must be connected");
    const int n = g.n;
    LaplacianBundle b = laplacian(g);
    Matrix W = spd_inverse(b.q_hat_float());
    Matrix Q = b.q_float();

    CorrectionConstants cc;
    cc.alpha.resize(n);
    for (int j = 0; j < n; ++j) cc.alpha[j] = W(j, j);
    cc.beta = matvec(Q, cc.alpha);

    double s1 = 0.0;  // sum_{k<j} beta_k W_jk beta_j
    for (int k = 0; k < n; ++k)
        for (int j = k + 1; j < n; ++j) s1 += cc.beta[k] * W(j, k) * cc.beta[j];
    cc.c1 = std::exp(-s1);

    double s2 = 0.0;
    for (int k = 0; k < n; ++k) s2 += cc.beta[k] * cc.beta[k] / (2.0 * (b.degrees[k] + 1));
    cc.c2 = std::exp(-s2);

    // R_kk = tr(L(e_k) W L(e_k) W) with L(e_k) = diag(Q e_k) = diag of column k of Q
    cc.r_diag.resize(n);
    double s3 = 0.0;
    for (int k = 0; k < n; ++k) {
        double r = 0.0;
        for (int a = 0; a < n; ++a) {
            double qa = Q(a, k);
            if (qa == 0.0) continue;
            for (int c = 0; c < n; ++c) {
                double qc = Q(c, k);
                if (qc == 0.0) continue;
                r += qa * W(a, c) * qc * W(c, a);
            }
        }
        cc.r_diag[k] = r;
        s3 += r / (2.0 * (b.degrees[k] + 1));
    }
    cc.c3 = std::exp(s3);

    double s4 = 0.0;
    for (auto [u, v] : g.edges) {
        double t = 1.0 / (b.degrees[u] + 1) + 1.0 / (b.degrees[v] + 1);
        s4 += t * t;
    }
    cc.c4 = std::exp(-0.25 * s4);
    return cc;
}

}  // namespace ec
