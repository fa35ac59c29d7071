#include "primephase/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "primephase/kernels.hpp"

namespace primephase {

CMatrix& CMatrix::operator+=(const CMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw DimensionMismatchError("matrix addition requires equal shapes");
    }
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

CMatrix& CMatrix::operator*=(cplx scale) {
    for (auto& v : data_) v *= scale;
    return *this;
}

cplx unit_root(std::int64_t k, std::int64_t n) noexcept {
    std::int64_t r = k % n;
    if (r < 0) r += n;
    const std::int64_t quarter = 4 * r;
    if (quarter % n == 0) {
        switch (quarter / n) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            default: return {0.0, -1.0};
        }
    }
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n);
    return {std::cos(angle), std::sin(angle)};
}

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionMismatchError("matmul: inner dimensions disagree");
    }
    CMatrix c(a.rows(), b.cols());
    kernels::matmul(a.data(), b.data(), c.data(), a.rows(), a.cols(), b.cols());
    return c;
}

CMatrix adjoint(const CMatrix& a) {
    CMatrix r(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = std::conj(a(i, j));
    }
    return r;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx s = a(i, j);
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    r(i * b.rows() + k, j * b.cols() + l) = s * b(k, l);
                }
            }
        }
    }
    return r;
}

cplx trace(const CMatrix& a) {
    cplx t = 0.0;
    for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) t += a(i, i);
    return t;
}

CVector matvec(const CMatrix& a, const CVector& x) {
    if (a.cols() != x.size()) {
        throw DimensionMismatchError("matvec: dimensions disagree");
    }
    CVector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        cplx acc = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * x[j];
        y[i] = acc;
    }
    return y;
}

double max_abs(const CMatrix& a) noexcept {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) worst = std::max(worst, std::abs(a(i, j)));
    }
    return worst;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatchError("max_abs_diff: shapes disagree");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    }
    return worst;
}

double unitarity_residual(const CMatrix& u) {
    return max_abs_diff(matmul(u, adjoint(u)), CMatrix::identity(u.rows()));
}

bool is_hermitian(const CMatrix& a, double tol) noexcept {
    if (a.rows() != a.cols()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = i; j < a.cols(); ++j) {
            if (std::abs(a(i, j) - std::conj(a(j, i))) > tol) return false;
        }
    }
    return true;
}

cplx inner(const CVector& u, const CVector& v) {
    if (u.size() != v.size()) {
        throw DimensionMismatchError("inner: vector lengths disagree");
    }
    cplx acc = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) acc += std::conj(u[i]) * v[i];
    return acc;
}

double norm(const CVector& v) {
    double acc = 0.0;
    for (const cplx& a : v) acc += std::norm(a);
    return std::sqrt(acc);
}

CMatrix lu_inverse(const CMatrix& a) {
    if (a.rows() != a.cols()) {
        throw DimensionMismatchError("lu_inverse: matrix must be square");
    }
    const std::size_t n = a.rows();
    CMatrix work = a;
    CMatrix inv = CMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        double best = std::abs(work(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(work(r, col)) > best) {
                best = std::abs(work(r, col));
                pivot = r;
            }
        }
        if (best == 0.0) {
            throw SingularMatrixError("no usable pivot in column " + std::to_string(col));
        }
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(work(col, j), work(pivot, j));
                std::swap(inv(col, j), inv(pivot, j));
            }
        }
        const cplx d = work(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            work(col, j) /= d;
            inv(col, j) /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const cplx f = work(r, col);
            if (f == cplx(0.0)) continue;
            for (std::size_t j = 0; j < n; ++j) {
                work(r, j) -= f * work(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

std::vector<double> singular_values(const CMatrix& a) {
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    // One-sided Jacobi: rotate column pairs until all pairs are orthogonal;
    // the singular values are then the column norms.
    CMatrix w = a;
    constexpr int kMaxSweeps = 60;
    constexpr double kTol = 1e-15;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < cols; ++p) {
            for (std::size_t q = p + 1; q < cols; ++q) {
                double alpha = 0.0, beta = 0.0;
                cplx gamma = 0.0;
                for (std::size_t r = 0; r < rows; ++r) {
                    alpha += std::norm(w(r, p));
                    beta += std::norm(w(r, q));
                    gamma += std::conj(w(r, p)) * w(r, q);
                }
                const double off = std::abs(gamma);
                if (off <= kTol * std::sqrt(alpha * beta) || off == 0.0) continue;
                rotated = true;
                // Diagonalize the Hermitian 2x2 Gram block [[alpha, gamma], [conj(gamma), beta]].
                const cplx phase = gamma / off;
                const double zeta = (beta - alpha) / (2.0 * off);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (std::size_t r = 0; r < rows; ++r) {
                    const cplx vp = w(r, p);
                    const cplx vq = w(r, q);
                    w(r, p) = c * vp - s * std::conj(phase) * vq;
                    w(r, q) = s * phase * vp + c * vq;
                }
            }
        }
        if (!rotated) break;
    }
    std::vector<double> sigma(cols);
    for (std::size_t j = 0; j < cols; ++j) {
        double acc = 0.0;
        for (std::size_t r = 0; r < rows; ++r) acc += std::norm(w(r, j));
        sigma[j] = std::sqrt(acc);
    }
    std::sort(sigma.begin(), sigma.end(), std::greater<double>());
    return sigma;
}

double condition_number(const CMatrix& a) {
    const auto sigma = singular_values(a);
    if (sigma.empty() || sigma.back() == 0.0) {
        throw SingularMatrixError("condition number of a rank-deficient matrix");
    }
    return sigma.front() / sigma.back();
}

}  // namespace primephase
