#include "primephase/hilbert.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "primephase/finite_field.hpp"
#include "primephase/kernels.hpp"

namespace primephase {

namespace {

void require_prime_dim(std::int64_t n) {
    if (!PrimeModulus::is_prime(n)) {
        throw NotPrimeError("dimension " + std::to_string(n) + " is not prime");
    }
}

}  // namespace

StateVector::StateVector(CVector amplitudes, Basis basis)
    : amps_(std::move(amplitudes)), basis_(basis) {
    require_prime_dim(static_cast<std::int64_t>(amps_.size()));
}

bool StateVector::is_normalized(double tol) const {
    double sum = 0.0;
    for (const cplx& a : amps_) sum += std::norm(a);
    return std::abs(sum - 1.0) <= tol;
}

cplx dft_kernel(std::int64_t q, std::int64_t m, std::int64_t n) {
    require_prime_dim(n);
    if (q < 0 || q >= n || m < 0 || m >= n) {
        throw IndexOutOfRangeError("dft_kernel: indices must lie in [0, N)");
    }
    return unit_root(-q * m, n) / std::sqrt(static_cast<double>(n));
}

CMatrix dft_matrix(std::int64_t n) {
    require_prime_dim(n);
    CMatrix f(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    kernels::dft_fill(f.data(), n);
    return f;
}

StateVector to_bloch(const StateVector& psi) {
    if (psi.basis() != Basis::Wannier) {
        throw WrongBasisError("to_bloch expects a Wannier-basis state");
    }
    return StateVector(matvec(adjoint(dft_matrix(psi.dim())), psi.amplitudes()), Basis::Bloch);
}

StateVector to_wannier(const StateVector& phi) {
    if (phi.basis() != Basis::Bloch) {
        throw WrongBasisError("to_wannier expects a Bloch-basis state");
    }
    return StateVector(matvec(dft_matrix(phi.dim()), phi.amplitudes()), Basis::Wannier);
}

MomentumGrid::MomentumGrid(std::int64_t n) : n_(n) {
    require_prime_dim(n);
    values_.resize(static_cast<std::size_t>(n));
    for (std::int64_t m = 0; m < n; ++m) {
        values_[m] = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n);
    }
}

}  // namespace primephase
