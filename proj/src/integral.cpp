#include "euler_census/integral.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "euler_census/asymptotic.hpp"
#include "euler_census/parallel.hpp"
#include "euler_census/rng.hpp"
#include "euler_census/spectral.hpp"

namespace ec {

namespace {
constexpr double kPi = 3.14159265358979323846264338328;
constexpr double kLn2Pi = 1.8378770664093454836;
constexpr double kLn2 = 0.6931471805599453094;
constexpr double kLnPi = 1.1447298858494001741;

// ln of the EulS prefactor: prod (d_j/2-1)! * 2^{m-n+1} * pi^{-n}
double log_euls_prefactor(const Graph& g) {
    double s = (g.m() - g.n + 1) * kLn2 - g.n * kLnPi;
    for (int v = 0; v < g.n; ++v) s += ln_factorial(g.degree(v) / 2 - 1);
    return s;
}
}  // namespace

IntegralModel build_model(const Graph& g, double epsilon) {
    if (!(epsilon > 0.0) || epsilon > 0.1)
        throw std::invalid_argument("build_model: epsilon must be in (0, 0.1]");
    ValidationReport rep = validate(g);
    if (!rep.all_ok())
        throw std::domain_error("build_model: graph must be simple, connected, all degrees even");
    IntegralModel m;
    m.g = g;
    m.epsilon = epsilon;
    LaplacianBundle b = laplacian(g);
    m.Q = b.q_float();
    m.Q_hat = b.q_hat_float();
    m.chol = cholesky(m.Q_hat);  // succeeds: Q_hat is PD for connected graphs
    m.W = spd_inverse(m.Q_hat);
    const int n = g.n;
    m.alpha.resize(n);
    for (int j = 0; j < n; ++j) m.alpha[j] = m.W(j, j);
    m.beta = matvec(m.Q, m.alpha);
    m.theta_scale.resize(n);
    for (int k = 0; k < n; ++k) m.theta_scale[k] = std::sqrt((b.degrees[k] + 1) / 2.0);
    m.box_radius = std::pow(static_cast<double>(n), -0.5 + epsilon);
    m.log_det_qhat = 0.0;
    for (int j = 0; j < n; ++j) m.log_det_qhat += 2.0 * std::log(m.chol(j, j));
    return m;
}

double r_quadratic(const IntegralModel& m, const std::vector<double>& xi) {
    const int n = m.g.n;
    std::vector<double> v = matvec(m.Q, xi);
    double r = 0.0;
    for (int j = 0; j < n; ++j) {
        if (v[j] == 0.0) continue;
        for (int k = 0; k < n; ++k) {
            double w = m.W(j, k);
            r += v[j] * v[k] * w * w;  // W symmetric: W_jk W_kj = W_jk^2
        }
    }
    return r;
}

std::complex<double> integrand_log_int(const IntegralModel& m, const std::vector<double>& xi) {
    const int n = m.g.n;
    double im = 0.0;
    for (int j = 0; j < n; ++j) im += xi[j] * m.beta[j];
    double quad = 0.0;
    for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int k = 0; k < n; ++k) s += m.Q_hat(j, k) * xi[k];
        quad += xi[j] * s;
    }
    double quartic = 0.0;
    for (auto [u, v] : m.g.edges) {
        double d = xi[u] - xi[v];
        double d2 = d * d;
        quartic += d2 * d2;
    }
    double re = -0.5 * quad - quartic / 12.0 + 0.5 * r_quadratic(m, xi);
    return {re, im};
}

bool v0_contains(const IntegralModel& m, const std::vector<double>& xi) {
    const int n = m.g.n;
    for (int j = 0; j < n; ++j) {
        if (std::fabs(xi[j]) > kPi / 2) return false;
        for (int k = j + 1; k < n; ++k) {
            double d = std::remainder(xi[j] - xi[k], kPi);
            if (std::fabs(d) > m.box_radius) return false;
        }
    }
    return true;
}

IntegralResult mc_estimate_int(const IntegralModel& m, std::uint64_t n_samples,
                               std::uint64_t seed, const McOptions& opts, unsigned workers) {
    if (n_samples < 1000) throw std::invalid_argument("mc_estimate_int: need at least 1e3 samples");
    auto t0 = std::chrono::steady_clock::now();
    const int n = m.g.n;
    const bool gaussian = opts.proposal == McOptions::Proposal::gaussian;

    const std::uint64_t chunk = 8192;
    const std::uint64_t n_chunks = (n_samples + chunk - 1) / chunk;
    struct ChunkSums {
        double re = 0, im = 0, re2 = 0, im2 = 0;
        std::uint64_t accepted = 0;
    };
    std::vector<ChunkSums> partial(n_chunks);

    parallel_for(
        n_chunks,
        [&](std::size_t c) {
            Kahan sre, sim, sre2, sim2;
            std::uint64_t accepted = 0;
            std::vector<double> theta(n), xi(n);
            const std::uint64_t lo = c * chunk;
            const std::uint64_t hi = std::min(n_samples, lo + chunk);
            for (std::uint64_t i = lo; i < hi; ++i) {
                Rng rng = Rng::substream(seed, i);
                for (int j = 0; j < n; ++j) theta[j] = rng.normal();
                if (gaussian) {
                    // xi = L^{-T} theta gives xi ~ N(0, Q_hat^{-1})
                    for (int j = n - 1; j >= 0; --j) {
                        double s = theta[j];
                        for (int k = j + 1; k < n; ++k) s -= m.chol(k, j) * xi[k];
                        xi[j] = s / m.chol(j, j);
                    }
                } else {
                    for (int j = 0; j < n; ++j) xi[j] = theta[j] / m.theta_scale[j];
                }
                bool inside = true;
                if (!opts.infinite_box)
                    for (int j = 0; j < n && inside; ++j)
                        if (std::fabs(xi[j]) > m.box_radius) inside = false;
                double wre = 0.0, wim = 0.0;
                if (inside) {
                    ++accepted;
                    double lr = 0.0, li = 0.0;
                    if (!gaussian) {
                        double quad = 0.0;
                        for (int j = 0; j < n; ++j) {
                            double s = 0.0;
                            for (int k = 0; k < n; ++k) s += m.Q_hat(j, k) * xi[k];
                            quad += xi[j] * s;
                        }
                        double t2 = 0.0;
                        for (int j = 0; j < n; ++j) t2 += theta[j] * theta[j];
                        lr += -0.5 * quad + 0.5 * t2;  // target Gaussian over proposal density
                    }
                    if (opts.include_quartic) {
                        double quartic = 0.0;
                        for (auto [u, v] : m.g.edges) {
                            double d = xi[u] - xi[v];
                            double d2 = d * d;
                            quartic += d2 * d2;
                        }
                        lr -= quartic / 12.0;
                    }
                    if (opts.include_r) lr += 0.5 * r_quadratic(m, xi);
                    if (opts.include_beta)
                        for (int j = 0; j < n; ++j) li += xi[j] * m.beta[j];
                    double mag = std::exp(lr);
                    wre = mag * std::cos(li);
                    wim = mag * std::sin(li);
                }
                sre.add(wre);
                sim.add(wim);
                sre2.add(wre * wre);
                sim2.add(wim * wim);
            }
            partial[c] = {sre.sum, sim.sum, sre2.sum, sim2.sum, accepted};
        },
        workers);

    // merge in chunk order so the result is worker-count independent
    Kahan sre, sim, sre2, sim2;
    std::uint64_t accepted = 0;
    for (const auto& p : partial) {
        sre.add(p.re);
        sim.add(p.im);
        sre2.add(p.re2);
        sim2.add(p.im2);
        accepted += p.accepted;
    }
    if (accepted == 0) throw std::runtime_error("mc_estimate_int: every sample fell outside the box");

    const double N = static_cast<double>(n_samples);
    double log_z = gaussian ? 0.5 * n * kLn2Pi - 0.5 * m.log_det_qhat : 0.5 * n * kLn2Pi;
    if (!gaussian)
        for (int k = 0; k < n; ++k) log_z -= std::log(m.theta_scale[k]);
    const double Z = std::exp(log_z);

    IntegralResult out;
    out.method = "monte-carlo";
    out.samples = n_samples;
    double mean_re = sre.sum / N, mean_im = sim.sum / N;
    out.value = Z * std::complex<double>(mean_re, mean_im);
    double var_re = std::max(0.0, (sre2.sum - N * mean_re * mean_re) / (N - 1));
    double var_im = std::max(0.0, (sim2.sum - N * mean_im * mean_im) / (N - 1));
    out.std_error_re = Z * std::sqrt(var_re / N);
    out.std_error_im = Z * std::sqrt(var_im / N);
    out.std_error = std::hypot(out.std_error_re, out.std_error_im);

    // EC via S ~= S_0 = 2^{-1/2} pi^{1/2} n^{-1} det(Q_hat) Int and EulS
    double int_re = out.value.real();
    if (int_re > 0.0) {
        double log_s0 = -0.5 * kLn2 + 0.5 * kLnPi - std::log(static_cast<double>(n)) +
                        m.log_det_qhat + std::log(int_re);
        out.ln_ec_implied = log_euls_prefactor(m.g) + log_s0;
    } else {
        out.ln_ec_implied = std::numeric_limits<double>::quiet_NaN();
    }
    out.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

namespace {

// Per ordered pair of axes (j,k), tables of tan/cos of every possible node
// difference. Axis j uses offset (0.5 + j/(4n)) * h, which keeps all
// differences away from the tan poles (a plain midpoint grid hits them for
// even N) without affecting the rule's exactness on pi-periodic integrands.
struct QuadTables {
    int n = 0, N = 0;
    std::vector<double> tan_t, cos_t;  // [j*n+k][delta + N-1]
    double node(int axis, int t, double h) const {
        return -kPi / 2 + (t + 0.5 + axis / (4.0 * n)) * h;
    }
    void build(int n_, int N_) {
        n = n_;
        N = N_;
        const double h = kPi / N;
        tan_t.assign(static_cast<std::size_t>(n) * n * (2 * N - 1), 0.0);
        cos_t.assign(tan_t.size(), 0.0);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if (j == k) continue;
                double off = (j - k) / (4.0 * n) * h;
                for (int d = -(N - 1); d <= N - 1; ++d) {
                    double delta = d * h + off;
                    std::size_t idx =
                        (static_cast<std::size_t>(j) * n + k) * (2 * N - 1) + (d + N - 1);
                    tan_t[idx] = std::tan(delta);
                    cos_t[idx] = std::cos(delta);
                }
            }
    }
    double tan_jk(int j, int k, int tj, int tk) const {
        return tan_t[(static_cast<std::size_t>(j) * n + k) * (2 * N - 1) + (tj - tk + N - 1)];
    }
    double cos_jk(int j, int k, int tj, int tk) const {
        return cos_t[(static_cast<std::size_t>(j) * n + k) * (2 * N - 1) + (tj - tk + N - 1)];
    }
};

// det by Gaussian elimination with partial pivoting; n <= 4.
std::complex<double> small_det(std::complex<double>* a, int n) {
    std::complex<double> det{1.0, 0.0};
    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = std::norm(a[k * n + k]);
        for (int i = k + 1; i < n; ++i) {
            double v = std::norm(a[i * n + k]);
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (best == 0.0) return {0.0, 0.0};
        if (piv != k) {
            for (int j = k; j < n; ++j) std::swap(a[piv * n + j], a[k * n + j]);
            det = -det;
        }
        det *= a[k * n + k];
        for (int i = k + 1; i < n; ++i) {
            std::complex<double> f = a[i * n + k] / a[k * n + k];
            for (int j = k; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
        }
    }
    return det;
}

// integrand at grid indices t: prod_edges cos Delta * det(Q_hat + iB) / n^2
std::complex<double> integrand_at(const Graph& g, const QuadTables& tab, const int* t) {
    const int n = g.n;
    std::complex<double> M[16];
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) M[j * n + k] = {1.0 + (j == k ? g.degree(j) : 0.0), 0.0};
    double coscale = 1.0;
    for (auto [u, v] : g.edges) {
        double tn = tab.tan_jk(u, v, t[u], t[v]);
        coscale *= tab.cos_jk(u, v, t[u], t[v]);
        M[u * n + v] += std::complex<double>(-1.0, -tn);   // Q_uv + iB_uv
        M[v * n + u] += std::complex<double>(-1.0, tn);    // B antisymmetric off-diagonal
        M[u * n + u] += std::complex<double>(0.0, tn);     // B_uu = sum tan Delta_ul
        M[v * n + v] += std::complex<double>(0.0, -tn);
    }
    std::complex<double> det = small_det(M, n);
    return det * (coscale / (static_cast<double>(n) * n));
}

}  // namespace

std::complex<double> quadrature_integrand(const Graph& g, const std::vector<double>& xi) {
    const int n = g.n;
    std::vector<std::complex<double>> M(static_cast<std::size_t>(n) * n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) M[j * n + k] = {1.0 + (j == k ? g.degree(j) : 0.0), 0.0};
    double coscale = 1.0;
    for (auto [u, v] : g.edges) {
        double d = xi[u] - xi[v];
        double tn = std::tan(d);
        coscale *= std::cos(d);
        M[u * n + v] += std::complex<double>(-1.0, -tn);
        M[v * n + u] += std::complex<double>(-1.0, tn);
        M[u * n + u] += std::complex<double>(0.0, tn);
        M[v * n + v] += std::complex<double>(0.0, -tn);
    }
    std::complex<double> det = small_det(M.data(), n);
    return det * (coscale / (static_cast<double>(n) * n));
}

std::complex<double> quadrature_eval(const Graph& g, int N, bool reduced, unsigned workers) {
    const int n = g.n;
    if (n < 2 || n > 4) throw std::invalid_argument("quadrature: only n <= 4 supported");
    if (N < 2) throw std::invalid_argument("quadrature: grid too small");
    QuadTables tab;
    tab.build(n, N);
    const double h = kPi / N;

    // The integrand is invariant under rotating every index by the same
    // amount mod N (periodicity in each coordinate plus the even degrees), so
    // the full tensor sum equals N times the t[0] = 0 slice. reduced=false
    // keeps the full loop for the cross-check test.
    const int free_axes = reduced ? n - 1 : n;
    std::uint64_t slice = 1;
    for (int a = 0; a < free_axes; ++a) slice *= static_cast<std::uint64_t>(N);
    const std::uint64_t outer = static_cast<std::uint64_t>(N);  // tasks over axis 1 (or 0)
    std::vector<std::pair<double, double>> partial(outer);

    parallel_for(
        static_cast<std::size_t>(outer),
        [&](std::size_t task) {
            Kahan re, im;
            int t[4] = {0, 0, 0, 0};
            const int first_free = reduced ? 1 : 0;
            t[first_free] = static_cast<int>(task);
            std::uint64_t inner = slice / N;
            for (std::uint64_t idx = 0; idx < inner; ++idx) {
                std::uint64_t rest = idx;
                for (int a = n - 1; a > first_free; --a) {
                    t[a] = static_cast<int>(rest % N);
                    rest /= N;
                }
                std::complex<double> v = integrand_at(g, tab, t);
                re.add(v.real());
                im.add(v.imag());
            }
            partial[task] = {re.sum, im.sum};
        },
        workers);

    Kahan re, im;
    for (const auto& p : partial) {
        re.add(p.first);
        im.add(p.second);
    }
    double cell = std::pow(h, n);
    double factor = reduced ? static_cast<double>(N) : 1.0;
    return std::complex<double>(re.sum, im.sum) * (cell * factor);
}

IntegralResult quadrature_S(const Graph& g, int grid_points_per_axis, unsigned workers) {
    auto t0 = std::chrono::steady_clock::now();
    ValidationReport rep = validate(g);
    if (!rep.all_ok())
        throw std::domain_error("quadrature_S: graph must be simple, connected, all degrees even");
    if (g.n > 4) throw std::invalid_argument("quadrature_S: only n <= 4 supported");
    if (grid_points_per_axis < 4)
        throw std::invalid_argument("quadrature_S: need at least 4 points per axis");

    int N = grid_points_per_axis;
    std::complex<double> prev = quadrature_eval(g, N, true, workers);
    std::complex<double> cur = prev;
    bool converged = false;
    for (int doubling = 0; doubling < 4 && !converged; ++doubling) {
        N *= 2;
        cur = quadrature_eval(g, N, true, workers);
        converged = std::abs(cur - prev) < 1e-3 * std::abs(cur);
        prev = cur;
    }
    if (!converged)
        throw std::runtime_error("quadrature_S: no convergence after 4 grid doublings");

    IntegralResult out;
    out.method = "quadrature";
    out.value = cur;
    std::uint64_t pts = 1;
    for (int a = 0; a < g.n; ++a) pts *= static_cast<std::uint64_t>(N);
    out.samples = pts;
    if (cur.real() > 0.0)
        out.ln_ec_implied = log_euls_prefactor(g) + std::log(cur.real());
    else
        out.ln_ec_implied = std::numeric_limits<double>::quiet_NaN();
    out.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

}  // namespace ec
