// Benchmark comparing the OpenMP kernels against the serial reference
// implementations.  Reports wall time for each, the speedup, and the largest
// absolute difference between the two outputs (expected to be zero: both
// paths sum in the same order).

#include <chrono>
#include <complex>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "primephase/kernels.hpp"
#include "primephase/phase_space.hpp"

namespace pp = primephase;
using pp::cplx;

namespace {

std::vector<cplx> random_vector(std::size_t n, std::mt19937& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<cplx> v(n);
    for (auto& x : v) x = cplx(dist(rng), dist(rng));
    return v;
}

template <typename F>
double time_ms(F&& fn, int reps) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

double max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

void report(const char* name, double serial_ms, double parallel_ms, double diff) {
    std::printf("%-28s %10.2f ms %10.2f ms %8.2fx %12.3e\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms, diff);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; both columns run serial code\n");
#endif
    std::printf("%-28s %13s %13s %9s %12s\n", "kernel", "serial", "parallel", "speedup",
                "max |diff|");

    std::mt19937 rng(20240817);

    {
        constexpr std::size_t n = 256;
        const auto a = random_vector(n * n, rng);
        const auto b = random_vector(n * n, rng);
        std::vector<cplx> c_ser(n * n), c_par(n * n);
        const double ts = time_ms([&] { pp::kernels::serial::matmul(a.data(), b.data(), c_ser.data(), n, n, n); }, 3);
        const double tp = time_ms([&] { pp::kernels::matmul(a.data(), b.data(), c_par.data(), n, n, n); }, 3);
        report("matmul 256x256", ts, tp, max_diff(c_ser, c_par));
    }

    {
        constexpr std::int64_t n = 1024;
        std::vector<cplx> f_ser(n * n), f_par(n * n);
        const double ts = time_ms([&] { pp::kernels::serial::dft_fill(f_ser.data(), n); }, 3);
        const double tp = time_ms([&] { pp::kernels::dft_fill(f_par.data(), n); }, 3);
        report("dft_fill n=1024", ts, tp, max_diff(f_ser, f_par));
    }

    {
        constexpr std::int64_t n = 31;
        const pp::PointOperatorCache cache(n);
        const auto op = random_vector(n * n, rng);
        std::vector<cplx> c_ser(n * n), c_par(n * n);
        const double ts = time_ms(
            [&] { pp::kernels::serial::weyl_coefficients(op.data(), cache.slab(), c_ser.data(), n); }, 5);
        const double tp = time_ms(
            [&] { pp::kernels::weyl_coefficients(op.data(), cache.slab(), c_par.data(), n); }, 5);
        report("weyl_coefficients n=31", ts, tp, max_diff(c_ser, c_par));

        std::vector<cplx> o_ser(n * n), o_par(n * n);
        const double rs = time_ms(
            [&] { pp::kernels::serial::reconstruct(c_ser.data(), cache.slab(), o_ser.data(), n); }, 5);
        const double rp = time_ms(
            [&] { pp::kernels::reconstruct(c_par.data(), cache.slab(), o_par.data(), n); }, 5);
        report("reconstruct n=31", rs, rp, max_diff(o_ser, o_par));
    }

    {
        constexpr std::int64_t n = 997;
        constexpr std::int64_t m = 8 * n + 1;
        const auto samples = random_vector(m, rng);
        std::vector<cplx> r_ser(n), r_par(n);
        const double ts = time_ms(
            [&] { pp::kernels::serial::lattice_restriction(samples.data(), m, r_ser.data(), n); }, 3);
        const double tp = time_ms(
            [&] { pp::kernels::lattice_restriction(samples.data(), m, r_par.data(), n); }, 3);
        report("lattice_restriction n=997", ts, tp, max_diff(r_ser, r_par));
    }

    return 0;
}
