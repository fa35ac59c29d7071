#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>

// Data-parallel inner loops, OpenMP-parallel in namespace kernels and with a
// serial reference implementation in kernels::serial.  Both variants perform
// the per-element arithmetic in the same order, so outputs agree exactly;
// the unit tests and the benchmark tool compare the two paths.
//
// All matrices are dense row-major.  Parallel loops only ever write disjoint
// output elements (inner sums stay serial), so results are independent of
// the thread count.

namespace primephase::kernels {

using cplx = std::complex<double>;

/// c = a (n x k) times b (k x m)
void matmul(const cplx* a, const cplx* b, cplx* c, std::size_t n, std::size_t k, std::size_t m);

/// f(q, m) = unit_root(-q*m, n) / sqrt(n), the n-point transform matrix.
void dft_fill(cplx* f, std::int64_t n);

/// coeffs[q*n+p] = Tr[op * point_ops[q*n+p]] / n for all n^2 phase points.
/// point_ops is a contiguous slab of n^2 matrices of n^2 entries each.
void weyl_coefficients(const cplx* op, const cplx* point_ops, cplx* coeffs, std::int64_t n);

/// out = sum over phase points of coeffs[q*n+p] * point_ops[q*n+p]
void reconstruct(const cplx* coeffs, const cplx* point_ops, cplx* out, std::int64_t n);

/// out[q] = (1/m) sum_j samples[j] * e^{+i k_j q},  k_j = 2*pi*j/m, q = 0..n-1
/// (trapezoid rule for (1/2pi) * integral over [0, 2pi) of g(k) e^{ikq} dk).
void lattice_restriction(const cplx* samples, std::int64_t m, cplx* out, std::int64_t n);

namespace serial {

void matmul(const cplx* a, const cplx* b, cplx* c, std::size_t n, std::size_t k, std::size_t m);
void dft_fill(cplx* f, std::int64_t n);
void weyl_coefficients(const cplx* op, const cplx* point_ops, cplx* coeffs, std::int64_t n);
void reconstruct(const cplx* coeffs, const cplx* point_ops, cplx* out, std::int64_t n);
void lattice_restriction(const cplx* samples, std::int64_t m, cplx* out, std::int64_t n);

}  // namespace serial

}  // namespace primephase::kernels
