#include "primephase/kernels.hpp"

#include <cmath>

#include "primephase/linalg.hpp"

namespace primephase::kernels {

namespace {

inline cplx dot_row_col(const cplx* a_row, const cplx* b, std::size_t k, std::size_t m,
                        std::size_t col) {
    cplx acc = 0.0;
    for (std::size_t t = 0; t < k; ++t) acc += a_row[t] * b[t * m + col];
    return acc;
}

inline cplx trace_product(const cplx* op, const cplx* point, std::int64_t n) {
    // Tr[op * point] = sum_{r,s} op(r,s) * point(s,r)
    cplx acc = 0.0;
    for (std::int64_t r = 0; r < n; ++r) {
        for (std::int64_t s = 0; s < n; ++s) acc += op[r * n + s] * point[s * n + r];
    }
    return acc;
}

inline cplx restriction_entry(const cplx* samples, std::int64_t m, std::int64_t q) {
    cplx acc = 0.0;
    for (std::int64_t j = 0; j < m; ++j) acc += samples[j] * unit_root(j * q, m);
    return acc / static_cast<double>(m);
}

}  // namespace

void matmul(const cplx* a, const cplx* b, cplx* c, std::size_t n, std::size_t k, std::size_t m) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
        for (std::size_t j = 0; j < m; ++j) c[i * m + j] = dot_row_col(a + i * k, b, k, m, j);
    }
}

void dft_fill(cplx* f, std::int64_t n) {
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
#pragma omp parallel for schedule(static)
    for (std::int64_t q = 0; q < n; ++q) {
        for (std::int64_t m = 0; m < n; ++m) f[q * n + m] = scale * unit_root(-q * m, n);
    }
}

void weyl_coefficients(const cplx* op, const cplx* point_ops, cplx* coeffs, std::int64_t n) {
    const std::int64_t points = n * n;
#pragma omp parallel for schedule(static)
    for (std::int64_t idx = 0; idx < points; ++idx) {
        coeffs[idx] = trace_product(op, point_ops + idx * points, n) / static_cast<double>(n);
    }
}

void reconstruct(const cplx* coeffs, const cplx* point_ops, cplx* out, std::int64_t n) {
    const std::int64_t points = n * n;
    const std::int64_t entries = n * n;
#pragma omp parallel for schedule(static)
    for (std::int64_t e = 0; e < entries; ++e) {
        cplx acc = 0.0;
        for (std::int64_t idx = 0; idx < points; ++idx) acc += coeffs[idx] * point_ops[idx * entries + e];
        out[e] = acc;
    }
}

void lattice_restriction(const cplx* samples, std::int64_t m, cplx* out, std::int64_t n) {
#pragma omp parallel for schedule(static)
    for (std::int64_t q = 0; q < n; ++q) out[q] = restriction_entry(samples, m, q);
}

namespace serial {

void matmul(const cplx* a, const cplx* b, cplx* c, std::size_t n, std::size_t k, std::size_t m) {
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) c[i * m + j] = dot_row_col(a + i * k, b, k, m, j);
    }
}

void dft_fill(cplx* f, std::int64_t n) {
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::int64_t q = 0; q < n; ++q) {
        for (std::int64_t m = 0; m < n; ++m) f[q * n + m] = scale * unit_root(-q * m, n);
    }
}

void weyl_coefficients(const cplx* op, const cplx* point_ops, cplx* coeffs, std::int64_t n) {
    const std::int64_t points = n * n;
    for (std::int64_t idx = 0; idx < points; ++idx) {
        coeffs[idx] = trace_product(op, point_ops + idx * points, n) / static_cast<double>(n);
    }
}

void reconstruct(const cplx* coeffs, const cplx* point_ops, cplx* out, std::int64_t n) {
    const std::int64_t points = n * n;
    const std::int64_t entries = n * n;
    for (std::int64_t e = 0; e < entries; ++e) {
        cplx acc = 0.0;
        for (std::int64_t idx = 0; idx < points; ++idx) acc += coeffs[idx] * point_ops[idx * entries + e];
        out[e] = acc;
    }
}

void lattice_restriction(const cplx* samples, std::int64_t m, cplx* out, std::int64_t n) {
    for (std::int64_t q = 0; q < n; ++q) out[q] = restriction_entry(samples, m, q);
}

}  // namespace serial

}  // namespace primephase::kernels
