#pragma once
#include <gmpxx.h>

#include <vector>

#include "euler_census/graph.hpp"
#include "euler_census/matrix.hpp"

namespace ec {

// Laplacian Q (degree diagonal, -1 on edges) and Q_hat = Q + J, exact integers.
struct LaplacianBundle {
    int n = 0;
    std::vector<std::vector<long>> Q;
    std::vector<std::vector<long>> Q_hat;
    std::vector<int> degrees;
    Matrix q_float() const;
    Matrix q_hat_float() const;
};

struct SpectralSummary {
    std::vector<double> eigenvalues;  // of Q, ascending
    double lambda2 = 0.0;
    double lambda_max = 0.0;
    mpz_class t_exact;       // spanning trees, 0 if disconnected
    double log_t = 0.0;      // ln t(G) from the positive eigenvalues; -inf if disconnected
    double gamma_observed = 0.0;  // lambda2 / n
};

struct Norms {
    double one = 0.0, inf = 0.0, two_bound = 0.0, hs = 0.0;
};

LaplacianBundle laplacian(const Graph& g);

// Cyclic Jacobi. Converged when every off-diagonal is <= 1e-12 * ||A||_F,
// at most 100 sweeps. Throws on non-symmetric input or non-convergence.
// If V is non-null it receives the eigenvector matrix (columns match the
// ascending eigenvalue order).
std::vector<double> eigenvalues_symmetric(const Matrix& A, Matrix* V = nullptr);

double algebraic_connectivity(const Graph& g);
bool is_gamma_mixing(const Graph& g, double gamma);

// Exact determinant of an integer matrix, Bareiss fraction-free elimination.
mpz_class bareiss_det(std::vector<std::vector<mpz_class>> a);
// Same over rationals (used for Tutte minors with arbitrary weights).
mpq_class bareiss_det_q(std::vector<std::vector<mpq_class>> a);

mpz_class spanning_tree_count_exact(const Graph& g);
mpz_class det_qhat_exact(const Graph& g);

// det of A(w) with row/column r removed, A_jk = -w_jk, A_jj = sum_{r != j} w_jr.
// weights is n x n with zero diagonal; r is 0-based.
mpq_class tutte_minor(const std::vector<std::vector<mpq_class>>& weights, int r);

// ln det(I+X) ~= sum_{r<m} (-1)^{r+1} tr(X^r)/r with the lemma's bound
// (n/m) ||X||^m / (1-||X||) in the 1-norm. Requires ||X||_1 < 1.
struct LogDetExpansion {
    double approx_logdet = 0.0;
    double error_bound = 0.0;
};
LogDetExpansion logdet_expansion(const Matrix& X, int m);

Norms norms(const Matrix& A);
double condition_number_1(const Matrix& A);

SpectralSummary spectral_summary(const Graph& g);

// ln of a positive bigint, good to double precision.
double log_mpz(const mpz_class& v);

}  // namespace ec
