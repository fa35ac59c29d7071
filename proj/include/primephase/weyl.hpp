#pragma once

#include <cstdint>

#include "primephase/finite_field.hpp"
#include "primephase/linalg.hpp"

namespace primephase {

/// Cyclic shift X: |q> -> |q+1 mod N>.  X^N = I; at N = 2 this is Pauli X.
CMatrix shift_operator(std::int64_t n);

/// Clock Z = diag(w^q) with w = e^{2*pi*i/N}.  Z^N = I; at N = 2 this is
/// Pauli Z.  Together X and Z satisfy Z X = w X Z.
CMatrix clock_operator(std::int64_t n);

/// Phase-space translation label (a, b): shift by a sites, boost by b
/// momentum steps.  Both components are canonical GF(N) residues of the
/// same prime modulus.
struct DisplacementLabel {
    FieldElement a;
    FieldElement b;

    DisplacementLabel(FieldElement a_, FieldElement b_);

    std::int64_t dim() const noexcept { return a.modulus().value(); }
};

/// Displacement D(a,b).  For odd N,
///     D(a,b) = w^{-2^{-1} a b} X^a Z^{-b},
/// with 2^{-1} taken in GF(N); the conjugate clock power pairs the momentum
/// label with the Bloch index fixed by the negative-exponent transform
/// kernel, so Wigner momentum marginals land at +p.  Satisfies D(0,0) = I,
/// D(a,b)^dag = D(-a,-b) and D(a,b)^N = I.
/// For N = 2 the phases are fourth roots, D(a,b) = i^{ab} X^a Z^b, which
/// reproduces the Pauli group: D(1,1) = Y.
CMatrix displacement(const DisplacementLabel& label);

}  // namespace primephase
