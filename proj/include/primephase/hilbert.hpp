#pragma once

#include <cstdint>
#include <vector>

#include "primephase/linalg.hpp"

namespace primephase {

enum class Basis { Wannier, Bloch };

/// Complex amplitude vector over an N-site lattice, N prime, tagged with the
/// basis it is expressed in: Wannier (site) or Bloch (crystal momentum).
/// Normalization is checked on demand, never silently enforced, so the type
/// can also carry unnormalized amplitudes (e.g. lattice restrictions).
class StateVector {
  public:
    StateVector(CVector amplitudes, Basis basis);

    std::int64_t dim() const noexcept { return static_cast<std::int64_t>(amps_.size()); }
    Basis basis() const noexcept { return basis_; }
    const CVector& amplitudes() const noexcept { return amps_; }

    bool is_normalized(double tol = 1e-12) const;

  private:
    CVector amps_;
    Basis basis_;
};

/// Transform kernel <q|p_m> = (1/sqrt(N)) e^{-2*pi*i*m*q/N}.
/// The minus sign in the exponent is the convention used throughout this
/// library; at N = 2 the kernel matrix is the Hadamard matrix.
cplx dft_kernel(std::int64_t q, std::int64_t m, std::int64_t n);

/// N x N transform matrix F with F(q, m) = dft_kernel(q, m, N); unitary.
/// Computed by direct evaluation (prime N defeats radix-2 splitting and the
/// dimensions here are small).
CMatrix dft_matrix(std::int64_t n);

/// Bloch coefficients of a Wannier-basis state: phi = F^dag psi.
StateVector to_bloch(const StateVector& psi);

/// Wannier amplitudes of a Bloch-basis state: psi = F phi.
StateVector to_wannier(const StateVector& phi);

/// The N crystal momentum values p_m = 2*pi*m/N (hbar = 1), all in [0, 2*pi).
class MomentumGrid {
  public:
    explicit MomentumGrid(std::int64_t n);

    std::int64_t dim() const noexcept { return n_; }
    const std::vector<double>& values() const noexcept { return values_; }

  private:
    std::int64_t n_;
    std::vector<double> values_;
};

}  // namespace primephase
