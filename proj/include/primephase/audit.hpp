#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "primephase/hilbert.hpp"
#include "primephase/linalg.hpp"

namespace primephase {

/// Complex-valued function of crystal momentum on the compact interval
/// [0, 2*pi) (unit lattice constant), evaluated only there.
struct ContinuumMomentumFunction {
    std::string label;
    std::function<cplx(double)> sample;
};

/// psi_q = (1/2pi) * integral over [0,2pi) of g(k) e^{ikq} dk for
/// q = 0..N-1, by the trapezoid rule on quad_points uniform nodes (exact
/// for trigonometric polynomials sampled above the Nyquist rate).
/// Returns an unnormalized Wannier-basis StateVector.
/// Requires quad_points >= 4N+1 (InsufficientQuadrature otherwise).
StateVector restrict_to_lattice(const ContinuumMomentumFunction& g, std::int64_t n,
                                std::int64_t quad_points);

/// Outcome of one aliasing probe: two momentum functions, their distance as
/// functions (L2 with the dk/2pi measure) and the distance of their lattice
/// restrictions (max over sites).
struct AuditReport {
    std::int64_t dim = 0;
    std::int64_t mode = 0;
    std::int64_t quad_points = 0;
    std::string g1;
    std::string g2;
    double lattice_distance = 0.0;
    double function_distance = 0.0;
    std::string verdict;  // NON_INJECTIVE or DISTINGUISHED
};

/// Probes the continuum->lattice restriction map with the pure mode
/// g1(k) = e^{-i m k}, m >= N, against g2(k) = e^{-i (m mod N) k} (the zero
/// function when m is a multiple of N).  When the two distinct functions
/// restrict to the same site amplitudes (lattice_distance < 1e-10 while
/// function_distance > 1e-3) the verdict is NON_INJECTIVE.
/// Throws BadModeIndex for m < N.  quad_points = 0 picks
/// max(8N+1, 2(m+N)+1), which keeps the quadrature exact for the probe.
AuditReport aliasing_witness(std::int64_t n, std::int64_t m, std::int64_t quad_points = 0);

/// Certificate that the N-point discrete transform is invertible: condition
/// number, explicit-inverse residual ||F^{-1} - F^dag||_max, and unitarity
/// residual ||F F^dag - I||_max.
struct BijectivityReport {
    std::int64_t dim = 0;
    double condition_number = 0.0;
    double inverse_residual = 0.0;
    double unitarity_residual = 0.0;
};

BijectivityReport discrete_bijectivity_report(std::int64_t n);

}  // namespace primephase
