#include "doctest.h"

#include <cmath>

#include "primephase/entanglement.hpp"

using namespace primephase;

namespace {

// Test-side inner product and partial trace, written directly on the
// amplitude arrays so the library routines are checked against independent
// arithmetic.
cplx oracle_inner(const CVector& u, const CVector& v) {
    cplx acc = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) acc += std::conj(u[i]) * v[i];
    return acc;
}

CMatrix oracle_reduced(const MultiQubitState& s, int keep) {
    const int n = s.n_qubits;
    const std::size_t dim = s.amplitudes.size();
    CMatrix rho(2, 2);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            const int bi = int(i >> (n - 1 - keep)) & 1;
            const int bj = int(j >> (n - 1 - keep)) & 1;
            // off-bit patterns must agree for the term to survive the trace
            const std::size_t mask = dim - 1 - (std::size_t(1) << (n - 1 - keep));
            if ((i & mask) != (j & mask)) continue;
            rho(bi, bj) += s.amplitudes[i] * std::conj(s.amplitudes[j]);
        }
    }
    return rho;
}

double identity_over_two_distance(const CMatrix& rho) {
    CMatrix target = CMatrix::identity(2);
    target *= cplx(0.5);
    return max_abs_diff(rho, target);
}

}  // namespace

TEST_CASE("Bell basis from the two-site primitives") {
    const auto basis = bell_basis();
    const double h = 1.0 / std::sqrt(2.0);

    // |00> -> (|00> + |11>)/sqrt(2)
    CHECK(std::abs(basis[0].amplitudes[0] - h) < 1e-15);
    CHECK(std::abs(basis[0].amplitudes[1]) < 1e-15);
    CHECK(std::abs(basis[0].amplitudes[2]) < 1e-15);
    CHECK(std::abs(basis[0].amplitudes[3] - h) < 1e-15);
    // |01> -> (|01> + |10>)/sqrt(2)
    CHECK(std::abs(basis[1].amplitudes[1] - h) < 1e-15);
    CHECK(std::abs(basis[1].amplitudes[2] - h) < 1e-15);
    // |10> -> (|00> - |11>)/sqrt(2)
    CHECK(std::abs(basis[2].amplitudes[0] - h) < 1e-15);
    CHECK(std::abs(basis[2].amplitudes[3] + h) < 1e-15);
    // |11> -> (|01> - |10>)/sqrt(2)
    CHECK(std::abs(basis[3].amplitudes[1] - h) < 1e-15);
    CHECK(std::abs(basis[3].amplitudes[2] + h) < 1e-15);

    // Gram matrix is the 4x4 identity
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const cplx g = oracle_inner(basis[i].amplitudes, basis[j].amplitudes);
            CHECK(std::abs(g - (i == j ? 1.0 : 0.0)) < 1e-12);
        }
    }

    // every Bell state has maximally mixed one-qubit reductions
    for (const auto& state : basis) {
        for (int keep = 0; keep < 2; ++keep) {
            CHECK(identity_over_two_distance(partial_trace(state, keep)) < 1e-12);
            CHECK(identity_over_two_distance(oracle_reduced(state, keep)) < 1e-12);
        }
    }
}

TEST_CASE("GHZ basis for three qubits") {
    const auto basis = ghz_basis();
    const double h = 1.0 / std::sqrt(2.0);

    // |000> -> (|000> + |111>)/sqrt(2)
    CHECK(std::abs(basis[0].amplitudes[0] - h) < 1e-15);
    CHECK(std::abs(basis[0].amplitudes[7] - h) < 1e-15);
    for (int k = 1; k < 7; ++k) CHECK(std::abs(basis[0].amplitudes[k]) < 1e-15);

    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            const cplx g = oracle_inner(basis[i].amplitudes, basis[j].amplitudes);
            CHECK(std::abs(g - (i == j ? 1.0 : 0.0)) < 1e-12);
        }
    }

    for (const auto& state : basis) {
        for (int keep = 0; keep < 3; ++keep) {
            CHECK(identity_over_two_distance(partial_trace(state, keep)) < 1e-12);
        }
    }
}

TEST_CASE("partial trace of known states") {
    // product state |0> (x) |1>: keeping qubit 0 gives |0><0|
    const MultiQubitState product{2, {0.0, 1.0, 0.0, 0.0}};
    const CMatrix kept = partial_trace(product, 0);
    CHECK(std::abs(kept(0, 0) - 1.0) < 1e-15);
    CHECK(std::abs(kept(1, 1)) < 1e-15);
    // keeping qubit 1 gives |1><1|
    const CMatrix other = partial_trace(product, 1);
    CHECK(std::abs(other(1, 1) - 1.0) < 1e-15);

    // library and oracle agree on every Bell/GHZ reduction
    for (const auto& s : bell_basis()) {
        for (int keep = 0; keep < 2; ++keep) {
            CHECK(max_abs_diff(partial_trace(s, keep), oracle_reduced(s, keep)) < 1e-15);
        }
    }
    for (const auto& s : ghz_basis()) {
        for (int keep = 0; keep < 3; ++keep) {
            CHECK(max_abs_diff(partial_trace(s, keep), oracle_reduced(s, keep)) < 1e-15);
        }
    }

    // reductions are positive with unit trace
    for (const auto& s : ghz_basis()) {
        const CMatrix rho = partial_trace(s, 1);
        CHECK(std::abs(trace(rho) - 1.0) < 1e-12);
        CHECK(is_hermitian(rho));
        CHECK(rho(0, 0).real() >= -1e-15);
        CHECK(rho(1, 1).real() >= -1e-15);
    }

    CHECK_THROWS_AS(partial_trace(product, 2), IndexOutOfRangeError);
    CHECK_THROWS_AS(partial_trace(product, -1), IndexOutOfRangeError);
}
