#include "euler_census/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ec {

Matrix LaplacianBundle::q_float() const {
    Matrix A(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A(i, j) = static_cast<double>(Q[i][j]);
    return A;
}

Matrix LaplacianBundle::q_hat_float() const {
    Matrix A(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A(i, j) = static_cast<double>(Q_hat[i][j]);
    return A;
}

LaplacianBundle laplacian(const Graph& g) {
    LaplacianBundle b;
    b.n = g.n;
    b.degrees = g.degrees();
    b.Q.assign(g.n, std::vector<long>(g.n, 0));
    for (int v = 0; v < g.n; ++v) b.Q[v][v] = b.degrees[v];
    for (auto [u, v] : g.edges) {
        b.Q[u][v] = -1;
        b.Q[v][u] = -1;
    }
    b.Q_hat = b.Q;
    for (auto& row : b.Q_hat)
        for (auto& x : row) x += 1;
    return b;
}

std::vector<double> eigenvalues_symmetric(const Matrix& A, Matrix* V) {
    if (A.rows() != A.cols()) throw std::invalid_argument("eigenvalues: not square");
    if (!A.is_symmetric(1e-12)) throw std::invalid_argument("eigenvalues: matrix not symmetric");
    const std::size_t n = A.rows();
    Matrix M = A;
    Matrix vecs = Matrix::identity(n);
    const double fro = frobenius_norm(A);
    const double tol = 1e-12 * (fro > 0.0 ? fro : 1.0);

    auto off_max = [&]() {
        double worst = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                worst = std::max(worst, std::fabs(M(i, j)));
        return worst;
    };

    int sweep = 0;
    for (; sweep < 100 && off_max() > tol; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                double apq = M(p, q);
                if (std::fabs(apq) <= tol * 1e-3) continue;
                // classic Jacobi rotation annihilating M(p,q)
                double theta = (M(q, q) - M(p, p)) / (2.0 * apq);
                double t = (theta >= 0.0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                double tau = s / (1.0 + c);
                double hpq = apq;
                M(p, p) -= t * hpq;
                M(q, q) += t * hpq;
                M(p, q) = M(q, p) = 0.0;
                for (std::size_t r = 0; r < n; ++r) {
                    if (r != p && r != q) {
                        double grp = M(r, p), grq = M(r, q);
                        M(r, p) = M(p, r) = grp - s * (grq + tau * grp);
                        M(r, q) = M(q, r) = grq + s * (grp - tau * grq);
                    }
                    double vrp = vecs(r, p), vrq = vecs(r, q);
                    vecs(r, p) = vrp - s * (vrq + tau * vrp);
                    vecs(r, q) = vrq + s * (vrp - tau * vrq);
                }
            }
    }
    if (off_max() > tol)
        throw std::runtime_error("jacobi: no convergence in 100 sweeps, residual " +
                                 std::to_string(off_max()));
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return M(a, a) < M(b, b); });
    std::vector<double> vals(n);
    for (std::size_t i = 0; i < n; ++i) vals[i] = M(order[i], order[i]);
    if (V) {
        *V = Matrix(n, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) (*V)(i, j) = vecs(i, order[j]);
    }
    return vals;
}

double algebraic_connectivity(const Graph& g) {
    if (g.n < 2) throw std::invalid_argument("algebraic_connectivity: need n >= 2");
    auto vals = eigenvalues_symmetric(laplacian(g).q_float());
    return vals[1];
}

bool is_gamma_mixing(const Graph& g, double gamma) {
    return algebraic_connectivity(g) >= gamma * g.n - 1e-9 * g.n;
}

mpz_class bareiss_det(std::vector<std::vector<mpz_class>> a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

mpq_class bareiss_det_q(std::vector<std::vector<mpq_class>> a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    // clear denominators row by row, then run the integer algorithm
    mpq_class scale = 1;
    std::vector<std::vector<mpz_class>> b(n, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class lcm = 1;
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j].canonicalize();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a[i][j].get_den().get_mpz_t());
        }
        for (std::size_t j = 0; j < n; ++j) {
            mpq_class v = a[i][j] * mpq_class(lcm);
            v.canonicalize();
            b[i][j] = v.get_num();
        }
        scale /= mpq_class(lcm);
    }
    mpq_class det(bareiss_det(std::move(b)));
    det *= scale;
    det.canonicalize();
    return det;
}

namespace {

std::vector<std::vector<mpz_class>> laplacian_minor_11(const Graph& g, bool hat) {
    LaplacianBundle b = laplacian(g);
    const auto& src = hat ? b.Q_hat : b.Q;
    std::vector<std::vector<mpz_class>> a(g.n - 1, std::vector<mpz_class>(g.n - 1));
    for (int i = 1; i < g.n; ++i)
        for (int j = 1; j < g.n; ++j) a[i - 1][j - 1] = src[i][j];
    return a;
}

}  // namespace

mpz_class spanning_tree_count_exact(const Graph& g) {
    if (g.n == 1) return 1;
    return bareiss_det(laplacian_minor_11(g, false));
}

mpz_class det_qhat_exact(const Graph& g) {
    LaplacianBundle b = laplacian(g);
    std::vector<std::vector<mpz_class>> a(g.n, std::vector<mpz_class>(g.n));
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) a[i][j] = b.Q_hat[i][j];
    return bareiss_det(std::move(a));
}

mpq_class tutte_minor(const std::vector<std::vector<mpq_class>>& weights, int r) {
    const int n = static_cast<int>(weights.size());
    if (r < 0 || r >= n) throw std::invalid_argument("tutte_minor: root out of range");
    std::vector<std::vector<mpq_class>> A(n, std::vector<mpq_class>(n, 0));
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            if (j == k) continue;
            A[j][k] = -weights[j][k];
            A[j][j] += weights[j][k];
        }
    std::vector<std::vector<mpq_class>> M(n - 1, std::vector<mpq_class>(n - 1));
    for (int i = 0, ii = 0; i < n; ++i) {
        if (i == r) continue;
        for (int j = 0, jj = 0; j < n; ++j) {
            if (j == r) continue;
            M[ii][jj++] = A[i][j];
        }
        ++ii;
    }
    return bareiss_det_q(std::move(M));
}

LogDetExpansion logdet_expansion(const Matrix& X, int m) {
    if (m < 2) throw std::invalid_argument("logdet_expansion: m must be >= 2");
    const double norm = one_norm(X);
    if (norm >= 1.0) throw std::domain_error("logdet_expansion: ||X||_1 must be < 1");
    const std::size_t n = X.rows();
    LogDetExpansion out;
    Matrix P = X;  // X^r
    for (int r = 1; r < m; ++r) {
        double tr = 0.0;
        for (std::size_t i = 0; i < n; ++i) tr += P(i, i);
        out.approx_logdet += (r % 2 ? 1.0 : -1.0) * tr / r;
        if (r + 1 < m) P = matmul(P, X);
    }
    out.error_bound = (static_cast<double>(n) / m) * std::pow(norm, m) / (1.0 - norm);
    return out;
}

Norms norms(const Matrix& A) {
    Norms v;
    v.one = one_norm(A);
    v.inf = inf_norm(A);
    v.hs = frobenius_norm(A);
    if (A.rows() == A.cols() && A.is_symmetric(1e-12)) {
        auto vals = eigenvalues_symmetric(A);
        for (double x : vals) v.two_bound = std::max(v.two_bound, std::fabs(x));
    } else {
        v.two_bound = v.hs;  // crude upper bound for the general case
    }
    return v;
}

double condition_number_1(const Matrix& A) {
    return one_norm(A) * one_norm(lu_inverse(A));
}

double log_mpz(const mpz_class& v) {
    if (v <= 0) return -std::numeric_limits<double>::infinity();
    signed long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * 0.6931471805599453094;
}

SpectralSummary spectral_summary(const Graph& g) {
    SpectralSummary s;
    s.eigenvalues = eigenvalues_symmetric(laplacian(g).q_float());
    const int n = g.n;
    s.lambda2 = n >= 2 ? s.eigenvalues[1] : 0.0;
    s.lambda_max = s.eigenvalues.back();
    s.gamma_observed = n > 0 ? s.lambda2 / n : 0.0;
    s.t_exact = spanning_tree_count_exact(g);
    bool connected = validate(g).is_connected;
    if (!connected) {
        s.t_exact = 0;
        s.log_t = -std::numeric_limits<double>::infinity();
    } else {
        double acc = -std::log(static_cast<double>(n));
        for (int i = 1; i < n; ++i) acc += std::log(s.eigenvalues[i]);
        s.log_t = n == 1 ? 0.0 : acc;
    }
    return s;
}

}  // namespace ec
