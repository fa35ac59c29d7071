#include "primephase/audit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "primephase/finite_field.hpp"
#include "primephase/kernels.hpp"

namespace primephase {

namespace {

constexpr double kLatticeTol = 1e-10;
constexpr double kFunctionTol = 1e-3;

void require_prime_dim(std::int64_t n) {
    if (!PrimeModulus::is_prime(n)) {
        throw NotPrimeError("dimension " + std::to_string(n) + " is not prime");
    }
}

CVector sample_on_grid(const ContinuumMomentumFunction& g, std::int64_t m) {
    CVector samples(static_cast<std::size_t>(m));
    for (std::int64_t j = 0; j < m; ++j) {
        const double k = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m);
        samples[j] = g.sample(k);
    }
    return samples;
}

ContinuumMomentumFunction pure_mode(std::int64_t mode) {
    return {"exp(-i*" + std::to_string(mode) + "*k)",
            [mode](double k) { return std::polar(1.0, -static_cast<double>(mode) * k); }};
}

ContinuumMomentumFunction zero_function() {
    return {"0", [](double) { return cplx(0.0); }};
}

}  // namespace

StateVector restrict_to_lattice(const ContinuumMomentumFunction& g, std::int64_t n,
                                std::int64_t quad_points) {
    require_prime_dim(n);
    if (quad_points < 4 * n + 1) {
        throw InsufficientQuadratureError("need at least 4N+1 = " + std::to_string(4 * n + 1) +
                                          " quadrature points, got " + std::to_string(quad_points));
    }
    const CVector samples = sample_on_grid(g, quad_points);
    CVector out(static_cast<std::size_t>(n));
    kernels::lattice_restriction(samples.data(), quad_points, out.data(), n);
    return StateVector(std::move(out), Basis::Wannier);
}

AuditReport aliasing_witness(std::int64_t n, std::int64_t m, std::int64_t quad_points) {
    require_prime_dim(n);
    if (m < n) {
        throw BadModeIndexError("witness mode must satisfy m >= N; got m = " + std::to_string(m) +
                                ", N = " + std::to_string(n));
    }
    // Keep the rule exact for every mode the probe touches.
    const std::int64_t needed = std::max(8 * n + 1, 2 * (m + n) + 1);
    if (quad_points == 0) {
        quad_points = needed;
    } else if (quad_points < needed) {
        throw InsufficientQuadratureError("mode " + std::to_string(m) + " needs at least " +
                                          std::to_string(needed) + " quadrature points");
    }

    const std::int64_t residue = m % n;
    const ContinuumMomentumFunction g1 = pure_mode(m);
    const ContinuumMomentumFunction g2 = residue == 0 ? zero_function() : pure_mode(residue);

    const CVector psi1 = restrict_to_lattice(g1, n, quad_points).amplitudes();
    const CVector psi2 = restrict_to_lattice(g2, n, quad_points).amplitudes();

    AuditReport report;
    report.dim = n;
    report.mode = m;
    report.quad_points = quad_points;
    report.g1 = g1.label;
    report.g2 = g2.label;

    for (std::int64_t q = 0; q < n; ++q) {
        report.lattice_distance = std::max(report.lattice_distance, std::abs(psi1[q] - psi2[q]));
    }

    const CVector s1 = sample_on_grid(g1, quad_points);
    const CVector s2 = sample_on_grid(g2, quad_points);
    double acc = 0.0;
    for (std::int64_t j = 0; j < quad_points; ++j) acc += std::norm(s1[j] - s2[j]);
    report.function_distance = std::sqrt(acc / static_cast<double>(quad_points));

    const bool collides =
        report.lattice_distance < kLatticeTol && report.function_distance > kFunctionTol;
    report.verdict = collides ? "NON_INJECTIVE" : "DISTINGUISHED";
    return report;
}

BijectivityReport discrete_bijectivity_report(std::int64_t n) {
    const CMatrix f = dft_matrix(n);  // validates primality
    BijectivityReport report;
    report.dim = n;
    report.condition_number = condition_number(f);
    report.inverse_residual = max_abs_diff(lu_inverse(f), adjoint(f));
    report.unitarity_residual = unitarity_residual(f);
    return report;
}

}  // namespace primephase
