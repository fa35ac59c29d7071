#pragma once

#include <array>
#include <cstdint>

#include "primephase/linalg.hpp"

namespace primephase {

/// Pure state of a small register of qubits, amplitudes in the
/// computational basis.  Qubit 0 is the most significant bit of the index.
struct MultiQubitState {
    int n_qubits;
    CVector amplitudes;
};

/// The four Bell states, obtained by applying the two-site transform
/// (a Hadamard) to the first qubit followed by a controlled shift, to each
/// computational basis state:
///   |00> -> (|00> + |11>)/sqrt(2), |01> -> (|01> + |10>)/sqrt(2),
///   |10> -> (|00> - |11>)/sqrt(2), |11> -> (|01> - |10>)/sqrt(2).
/// Built entirely from dft_matrix(2) and shift_operator(2).
std::array<MultiQubitState, 4> bell_basis();

/// The eight GHZ-type states for three qubits: transform on the first
/// qubit, then controlled shifts onto qubits 1 and 2.
/// |000> -> (|000> + |111>)/sqrt(2), etc.
std::array<MultiQubitState, 8> ghz_basis();

/// Reduced 2x2 density matrix of one qubit, tracing out the others.
/// Throws IndexOutOfRange for keep outside [0, n_qubits).
CMatrix partial_trace(const MultiQubitState& state, int keep);

}  // namespace primephase
