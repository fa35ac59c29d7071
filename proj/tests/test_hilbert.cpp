#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "primephase/hilbert.hpp"

using namespace primephase;

namespace {

constexpr double kPi = std::numbers::pi;

CVector random_state(std::int64_t n, std::mt19937& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    CVector v(static_cast<std::size_t>(n));
    for (auto& a : v) a = cplx(dist(rng), dist(rng));
    double s = 0.0;
    for (const auto& a : v) s += std::norm(a);
    for (auto& a : v) a /= std::sqrt(s);
    return v;
}

double max_amp_diff(const CVector& a, const CVector& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

}  // namespace

TEST_CASE("transform kernel values") {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (std::int64_t m = 0; m < 5; ++m) {
        CHECK(std::abs(dft_kernel(0, m, 5) - cplx(1.0 / std::sqrt(5.0))) == 0.0);
    }
    // Hadamard corner entry: (q=1, m=1, N=2) -> -1/sqrt(2), exactly
    CHECK(dft_kernel(1, 1, 2) == cplx(-inv_sqrt2, 0.0));
    // direct evaluation at N=3
    const cplx expected = std::polar(1.0 / std::sqrt(3.0), -2.0 * kPi / 3.0);
    CHECK(std::abs(dft_kernel(1, 1, 3) - expected) < 1e-15);

    CHECK_THROWS_AS(dft_kernel(0, 3, 3), IndexOutOfRangeError);
    CHECK_THROWS_AS(dft_kernel(-1, 0, 3), IndexOutOfRangeError);
    CHECK_THROWS_AS(dft_kernel(0, 0, 4), NotPrimeError);
}

TEST_CASE("two-point transform is the Hadamard matrix") {
    const CMatrix f = dft_matrix(2);
    const double h = 1.0 / std::sqrt(2.0);
    CHECK(f(0, 0) == cplx(h));
    CHECK(f(0, 1) == cplx(h));
    CHECK(f(1, 0) == cplx(h));
    CHECK(f(1, 1) == cplx(-h));
}

TEST_CASE("transform matrices are unitary with orthonormal columns") {
    CHECK(unitarity_residual(dft_matrix(3)) < 1e-12);

    // Gram matrix via direct inner products (column orthonormality)
    const CMatrix f = dft_matrix(5);
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = 0; j < 5; ++j) {
            cplx gram = 0.0;
            for (std::size_t q = 0; q < 5; ++q) gram += std::conj(f(q, i)) * f(q, j);
            CHECK(std::abs(gram - (i == j ? 1.0 : 0.0)) < 1e-12);
        }
    }

    CHECK_THROWS_AS(dft_matrix(6), NotPrimeError);
    CHECK_THROWS_AS(dft_matrix(1), NotPrimeError);
}

TEST_CASE("site basis completeness: sum of |q><q| is the identity") {
    const std::int64_t n = 7;
    CMatrix sum(n, n);
    for (std::int64_t q = 0; q < n; ++q) sum(q, q) += 1.0;  // |q><q| is the q-th diagonal unit
    CHECK(max_abs_diff(sum, CMatrix::identity(n)) == 0.0);
}

TEST_CASE("basis change examples") {
    // |0> in the Wannier basis spreads uniformly over momenta (N = 2):
    // first Hadamard column
    const StateVector psi0(CVector{1.0, 0.0}, Basis::Wannier);
    const StateVector phi0 = to_bloch(psi0);
    CHECK(phi0.basis() == Basis::Bloch);
    CHECK(max_amp_diff(phi0.amplitudes(), {cplx(1 / std::sqrt(2.0)), cplx(1 / std::sqrt(2.0))}) <
          1e-15);

    // uniform Wannier state -> momentum zero (geometric series collapses)
    const std::int64_t n = 7;
    CVector uniform(n, cplx(1.0 / std::sqrt(double(n))));
    const StateVector phi = to_bloch(StateVector(uniform, Basis::Wannier));
    CVector delta0(n, cplx(0.0));
    delta0[0] = 1.0;
    CHECK(max_amp_diff(phi.amplitudes(), delta0) < 1e-12);
}

TEST_CASE("round trips preserve states and norms") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        const StateVector psi(random_state(7, rng), Basis::Wannier);
        const StateVector back = to_wannier(to_bloch(psi));
        CHECK(max_amp_diff(back.amplitudes(), psi.amplitudes()) < 1e-12);
        // Parseval
        CHECK(std::abs(norm(to_bloch(psi).amplitudes()) - norm(psi.amplitudes())) < 1e-12);
    }
}

TEST_CASE("basis tags are enforced") {
    const StateVector psi(CVector{1.0, 0.0}, Basis::Wannier);
    const StateVector phi(CVector{1.0, 0.0}, Basis::Bloch);
    CHECK_THROWS_AS(to_bloch(phi), WrongBasisError);
    CHECK_THROWS_AS(to_wannier(psi), WrongBasisError);
}

TEST_CASE("state vectors require prime dimension; normalization is a check") {
    CHECK_THROWS_AS(StateVector(CVector(4, cplx(0.5)), Basis::Wannier), NotPrimeError);
    const StateVector unnormalized(CVector{2.0, 0.0}, Basis::Wannier);
    CHECK_FALSE(unnormalized.is_normalized());
    const StateVector unit(CVector{1.0, 0.0}, Basis::Wannier);
    CHECK(unit.is_normalized());
}

TEST_CASE("momentum grid covers [0, 2pi) with N points") {
    const MomentumGrid grid(5);
    REQUIRE(grid.values().size() == 5);
    for (std::int64_t m = 0; m < 5; ++m) {
        CHECK(grid.values()[m] == doctest::Approx(2.0 * kPi * m / 5.0).epsilon(1e-15));
        CHECK(grid.values()[m] >= 0.0);
        CHECK(grid.values()[m] < 2.0 * kPi);
    }
    CHECK_THROWS_AS(MomentumGrid(9), NotPrimeError);
}
