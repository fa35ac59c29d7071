#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "primephase/errors.hpp"

namespace primephase {

using cplx = std::complex<double>;
using CVector = std::vector<cplx>;

/// Dense row-major complex matrix.  Sized for the lattice dimensions this
/// library works at (N up to a few hundred); all heavy loops live in the
/// kernels module.
class CMatrix {
  public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static CMatrix identity(std::size_t n) {
        CMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    cplx& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
    cplx operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

    cplx* data() noexcept { return data_.data(); }
    const cplx* data() const noexcept { return data_.data(); }

    CMatrix& operator+=(const CMatrix& other);
    CMatrix& operator*=(cplx scale);

    friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
    friend CMatrix operator*(cplx s, CMatrix a) { return a *= s; }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

/// e^{2*pi*i*k/n} with the exponent reduced mod n.  Quarter-turn angles
/// (k/n in {0, 1/4, 1/2, 3/4}) are returned exactly so that small-dimension
/// operators reproduce the textbook integer matrices bit-for-bit.
cplx unit_root(std::int64_t k, std::int64_t n) noexcept;

CMatrix matmul(const CMatrix& a, const CMatrix& b);
CMatrix adjoint(const CMatrix& a);
CMatrix kron(const CMatrix& a, const CMatrix& b);
cplx trace(const CMatrix& a);
CVector matvec(const CMatrix& a, const CVector& x);

double max_abs(const CMatrix& a) noexcept;
double max_abs_diff(const CMatrix& a, const CMatrix& b);

/// ||U U^dag - I||_max
double unitarity_residual(const CMatrix& u);

bool is_hermitian(const CMatrix& a, double tol = 1e-12) noexcept;

/// Inner product <u|v> = sum conj(u_i) v_i  (conjugation on the first slot).
cplx inner(const CVector& u, const CVector& v);
double norm(const CVector& v);

/// Inverse by Gaussian elimination with partial pivoting.
/// Throws SingularMatrix when no usable pivot remains.
CMatrix lu_inverse(const CMatrix& a);

/// Singular values in descending order, by one-sided Jacobi orthogonalization.
std::vector<double> singular_values(const CMatrix& a);

/// sigma_max / sigma_min.
double condition_number(const CMatrix& a);

}  // namespace primephase
