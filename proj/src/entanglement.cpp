#include "primephase/entanglement.hpp"

#include <string>

#include "primephase/hilbert.hpp"
#include "primephase/weyl.hpp"

namespace primephase {

namespace {

// |0><0| and |1><1| on one qubit, used to assemble controlled gates.
CMatrix ket_bra_projector(int level) {
    CMatrix p(2, 2);
    p(level, level) = 1.0;
    return p;
}

// Controlled shift with control on qubit 0 and target on qubit `target`
// of an n-qubit register.
CMatrix controlled_shift(int n_qubits, int target) {
    const CMatrix x = shift_operator(2);
    const CMatrix i2 = CMatrix::identity(2);
    CMatrix on_control = ket_bra_projector(0);
    CMatrix off_branch = ket_bra_projector(1);
    for (int qubit = 1; qubit < n_qubits; ++qubit) {
        on_control = kron(on_control, i2);
        off_branch = kron(off_branch, qubit == target ? x : i2);
    }
    return on_control + off_branch;
}

MultiQubitState column_state(const CMatrix& u, std::size_t col, int n_qubits) {
    CVector amps(u.rows());
    for (std::size_t r = 0; r < u.rows(); ++r) amps[r] = u(r, col);
    return {n_qubits, std::move(amps)};
}

}  // namespace

std::array<MultiQubitState, 4> bell_basis() {
    const CMatrix h = dft_matrix(2);
    const CMatrix u = matmul(controlled_shift(2, 1), kron(h, CMatrix::identity(2)));
    std::array<MultiQubitState, 4> basis = {column_state(u, 0, 2), column_state(u, 1, 2),
                                            column_state(u, 2, 2), column_state(u, 3, 2)};
    return basis;
}

std::array<MultiQubitState, 8> ghz_basis() {
    const CMatrix h = dft_matrix(2);
    const CMatrix spread = kron(h, CMatrix::identity(4));
    const CMatrix u = matmul(controlled_shift(3, 2), matmul(controlled_shift(3, 1), spread));
    std::array<MultiQubitState, 8> basis = {column_state(u, 0, 3), column_state(u, 1, 3),
                                            column_state(u, 2, 3), column_state(u, 3, 3),
                                            column_state(u, 4, 3), column_state(u, 5, 3),
                                            column_state(u, 6, 3), column_state(u, 7, 3)};
    return basis;
}

CMatrix partial_trace(const MultiQubitState& state, int keep) {
    const int n = state.n_qubits;
    if (keep < 0 || keep >= n) {
        throw IndexOutOfRangeError("partial_trace: qubit index " + std::to_string(keep) +
                                   " outside [0, " + std::to_string(n) + ")");
    }
    const std::size_t dim = state.amplitudes.size();
    const int shift = n - 1 - keep;  // qubit 0 is the most significant bit
    const std::size_t bit = std::size_t(1) << shift;
    CMatrix rho(2, 2);
    for (std::size_t base = 0; base < dim; ++base) {
        if (base & bit) continue;  // enumerate indices with the kept bit clear
        const cplx a0 = state.amplitudes[base];
        const cplx a1 = state.amplitudes[base | bit];
        rho(0, 0) += a0 * std::conj(a0);
        rho(0, 1) += a0 * std::conj(a1);
        rho(1, 0) += a1 * std::conj(a0);
        rho(1, 1) += a1 * std::conj(a1);
    }
    return rho;
}

}  // namespace primephase
