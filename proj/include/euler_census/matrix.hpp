#pragma once
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ec {

// Dense row-major double matrix. Small and boring on purpose: everything in
// this project is n <= a few hundred, so no blocking or sparsity anywhere.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix I(n, n);
        for (std::size_t i = 0; i < n; ++i) I(i, i) = 1.0;
        return I;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    const std::vector<double>& data() const { return a_; }
    std::vector<double>& data() { return a_; }

    bool is_symmetric(double rel_tol) const {
        if (rows_ != cols_) return false;
        double scale = 0.0;
        for (double v : a_) scale = std::max(scale, std::fabs(v));
        if (scale == 0.0) return true;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if (std::fabs((*this)(i, j) - (*this)(j, i)) > rel_tol * scale) return false;
        return true;
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<double> a_;
};

inline Matrix matmul(const Matrix& A, const Matrix& B) {
    if (A.cols() != B.rows()) throw std::invalid_argument("matmul: shape mismatch");
    Matrix C(A.rows(), B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t k = 0; k < A.cols(); ++k) {
            double aik = A(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < B.cols(); ++j) C(i, j) += aik * B(k, j);
        }
    return C;
}

inline std::vector<double> matvec(const Matrix& A, const std::vector<double>& x) {
    if (A.cols() != x.size()) throw std::invalid_argument("matvec: shape mismatch");
    std::vector<double> y(A.rows(), 0.0);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < A.cols(); ++j) s += A(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

inline double one_norm(const Matrix& A) {
    double best = 0.0;
    for (std::size_t j = 0; j < A.cols(); ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < A.rows(); ++i) s += std::fabs(A(i, j));
        best = std::max(best, s);
    }
    return best;
}

inline double inf_norm(const Matrix& A) {
    double best = 0.0;
    for (std::size_t i = 0; i < A.rows(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < A.cols(); ++j) s += std::fabs(A(i, j));
        best = std::max(best, s);
    }
    return best;
}

inline double frobenius_norm(const Matrix& A) {
    double s = 0.0;
    for (double v : A.data()) s += v * v;
    return std::sqrt(s);
}

// Lower Cholesky factor of a symmetric positive definite matrix.
inline Matrix cholesky(const Matrix& A) {
    if (A.rows() != A.cols()) throw std::invalid_argument("cholesky: not square");
    std::size_t n = A.rows();
    Matrix L(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        double d = A(j, j);
        for (std::size_t k = 0; k < j; ++k) d -= L(j, k) * L(j, k);
        if (d <= 0.0) throw std::domain_error("cholesky: matrix not positive definite");
        L(j, j) = std::sqrt(d);
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = A(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= L(i, k) * L(j, k);
            L(i, j) = s / L(j, j);
        }
    }
    return L;
}

// Solve L y = b (forward) then L^T x = y (backward).
inline std::vector<double> cholesky_solve(const Matrix& L, std::vector<double> b) {
    std::size_t n = L.rows();
    for (std::size_t i = 0; i < n; ++i) {
        double s = b[i];
        for (std::size_t k = 0; k < i; ++k) s -= L(i, k) * b[k];
        b[i] = s / L(i, i);
    }
    for (std::size_t ii = n; ii-- > 0;) {
        double s = b[ii];
        for (std::size_t k = ii + 1; k < n; ++k) s -= L(k, ii) * b[k];
        b[ii] = s / L(ii, ii);
    }
    return b;
}

// SPD inverse via Cholesky solves against the identity.
inline Matrix spd_inverse(const Matrix& A) {
    std::size_t n = A.rows();
    Matrix L = cholesky(A);
    Matrix W(n, n);
    std::vector<double> e(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        e[j] = 1.0;
        std::vector<double> col = cholesky_solve(L, e);
        for (std::size_t i = 0; i < n; ++i) W(i, j) = col[i];
        e[j] = 0.0;
    }
    // symmetrize away roundoff from the solve order
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            double v = 0.5 * (W(i, j) + W(j, i));
            W(i, j) = W(j, i) = v;
        }
    return W;
}

// Determinant by LU with partial pivoting; fine as a float oracle.
inline double lu_det(Matrix A) {
    if (A.rows() != A.cols()) throw std::invalid_argument("lu_det: not square");
    std::size_t n = A.rows();
    double det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::fabs(A(i, k)) > std::fabs(A(piv, k))) piv = i;
        if (A(piv, k) == 0.0) return 0.0;
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(A(piv, j), A(k, j));
            det = -det;
        }
        det *= A(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            double f = A(i, k) / A(k, k);
            for (std::size_t j = k; j < n; ++j) A(i, j) -= f * A(k, j);
        }
    }
    return det;
}

// General (non-SPD) inverse by Gauss-Jordan with partial pivoting.
inline Matrix lu_inverse(Matrix A) {
    if (A.rows() != A.cols()) throw std::invalid_argument("lu_inverse: not square");
    std::size_t n = A.rows();
    Matrix X = Matrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::fabs(A(i, k)) > std::fabs(A(piv, k))) piv = i;
        if (A(piv, k) == 0.0) throw std::domain_error("lu_inverse: singular matrix");
        if (piv != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(A(piv, j), A(k, j));
                std::swap(X(piv, j), X(k, j));
            }
        double p = A(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            A(k, j) /= p;
            X(k, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            double f = A(i, k);
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                A(i, j) -= f * A(k, j);
                X(i, j) -= f * X(k, j);
            }
        }
    }
    return X;
}

}  // namespace ec
