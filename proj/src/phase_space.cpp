#include "primephase/phase_space.hpp"

#include <string>

#include "primephase/kernels.hpp"

namespace primephase {

namespace {

void require_prime_dim(std::int64_t n) {
    if (!PrimeModulus::is_prime(n)) {
        throw NotPrimeError("dimension " + std::to_string(n) + " is not prime");
    }
}

enum class MatmulPath { Parallel, Serial };

CMatrix multiply(const CMatrix& a, const CMatrix& b, MatmulPath path) {
    CMatrix c(a.rows(), b.cols());
    if (path == MatmulPath::Parallel) {
        kernels::matmul(a.data(), b.data(), c.data(), a.rows(), a.cols(), b.cols());
    } else {
        kernels::serial::matmul(a.data(), b.data(), c.data(), a.rows(), a.cols(), b.cols());
    }
    return c;
}

// The qubit point operators follow the line-based construction; displaced
// parity degenerates at N = 2 where the parity operator is the identity.
CMatrix qubit_point_operator(std::int64_t q, std::int64_t p, MatmulPath path) {
    const CMatrix x = shift_operator(2);
    const CMatrix z = clock_operator(2);
    const CMatrix y = cplx(0.0, 1.0) * multiply(x, z, path);
    const double sq = (q == 0) ? 1.0 : -1.0;
    const double sp = (p == 0) ? 1.0 : -1.0;
    CMatrix a = CMatrix::identity(2);
    a += sq * z;
    a += sp * x;
    a += (sq * sp) * y;
    a *= 0.5;
    return a;
}

CMatrix build_point_operator(std::int64_t n, std::int64_t q, std::int64_t p, MatmulPath path) {
    if (n == 2) return qubit_point_operator(q, p, path);
    const PrimeModulus mod(n);
    const CMatrix d = displacement(DisplacementLabel(FieldElement(q, mod), FieldElement(p, mod)));
    return multiply(multiply(d, parity_operator(n), path), adjoint(d), path);
}

}  // namespace

PhasePoint::PhasePoint(FieldElement q_, FieldElement p_) : q(q_), p(p_) {
    if (q.modulus() != p.modulus()) {
        throw ModulusMismatchError("phase point components must share a modulus");
    }
}

double WignerFunction::sum() const noexcept {
    double acc = 0.0;
    for (double v : values_) acc += v;
    return acc;
}

CMatrix parity_operator(std::int64_t n) {
    require_prime_dim(n);
    CMatrix pi(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (std::int64_t col = 0; col < n; ++col) pi((n - col) % n, col) = 1.0;
    return pi;
}

CMatrix point_operator(const PhasePoint& point) {
    return build_point_operator(point.dim(), point.q.value(), point.p.value(), MatmulPath::Parallel);
}

PointOperatorCache::PointOperatorCache(std::int64_t dim) : dim_(dim) {
    require_prime_dim(dim);
    const std::int64_t points = dim * dim;
    const std::int64_t entries = dim * dim;
    slab_.resize(static_cast<std::size_t>(points * entries));
    // Parallel over points; each point builds with serial matmuls so the
    // work is not nested.
#pragma omp parallel for schedule(static)
    for (std::int64_t idx = 0; idx < points; ++idx) {
        const CMatrix a = build_point_operator(dim_, idx / dim_, idx % dim_, MatmulPath::Serial);
        std::copy(a.data(), a.data() + entries, slab_.begin() + idx * entries);
    }
}

CMatrix PointOperatorCache::matrix(std::int64_t q, std::int64_t p) const {
    CMatrix a(static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_));
    const cplx* src = raw(q, p);
    std::copy(src, src + dim_ * dim_, a.data());
    return a;
}

CoefficientTable weyl_expand(const CMatrix& op, const PointOperatorCache& cache) {
    const std::int64_t n = cache.dim();
    if (op.rows() != static_cast<std::size_t>(n) || op.cols() != static_cast<std::size_t>(n)) {
        throw DimensionMismatchError("weyl_expand: operator shape does not match the cache");
    }
    CoefficientTable coeffs(n);
    kernels::weyl_coefficients(op.data(), cache.slab(), coeffs.data(), n);
    return coeffs;
}

CoefficientTable weyl_expand(const CMatrix& op) {
    if (op.rows() != op.cols()) {
        throw DimensionMismatchError("weyl_expand: operator must be square");
    }
    return weyl_expand(op, PointOperatorCache(static_cast<std::int64_t>(op.rows())));
}

CMatrix reconstruct(const CoefficientTable& coeffs, const PointOperatorCache& cache) {
    const std::int64_t n = cache.dim();
    if (coeffs.dim() != n) {
        throw DimensionMismatchError("reconstruct: table dimension does not match the cache");
    }
    CMatrix out(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    kernels::reconstruct(coeffs.data(), cache.slab(), out.data(), n);
    return out;
}

CMatrix reconstruct(const CoefficientTable& coeffs) {
    return reconstruct(coeffs, PointOperatorCache(coeffs.dim()));
}

WignerFunction wigner_transform(const CMatrix& rho, const PointOperatorCache& cache) {
    if (!is_hermitian(rho)) {
        throw NonHermitianInputError("wigner_transform requires a Hermitian operator");
    }
    const CoefficientTable coeffs = weyl_expand(rho, cache);
    const std::int64_t n = cache.dim();
    WignerFunction w(n);
    for (std::int64_t q = 0; q < n; ++q) {
        for (std::int64_t p = 0; p < n; ++p) w(q, p) = coeffs(q, p).real();
    }
    return w;
}

WignerFunction wigner_transform(const CMatrix& rho) {
    if (rho.rows() != rho.cols()) {
        throw DimensionMismatchError("wigner_transform: operator must be square");
    }
    return wigner_transform(rho, PointOperatorCache(static_cast<std::int64_t>(rho.rows())));
}

Marginals marginals(const WignerFunction& w) {
    const std::int64_t n = w.dim();
    Marginals m;
    m.position.assign(static_cast<std::size_t>(n), 0.0);
    m.momentum.assign(static_cast<std::size_t>(n), 0.0);
    for (std::int64_t q = 0; q < n; ++q) {
        for (std::int64_t p = 0; p < n; ++p) {
            m.position[q] += w(q, p);
            m.momentum[p] += w(q, p);
        }
    }
    return m;
}

}  // namespace primephase
