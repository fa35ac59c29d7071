#include "primephase/weyl.hpp"

#include <string>

namespace primephase {

namespace {

void require_prime_dim(std::int64_t n) {
    if (!PrimeModulus::is_prime(n)) {
        throw NotPrimeError("dimension " + std::to_string(n) + " is not prime");
    }
}

}  // namespace

CMatrix shift_operator(std::int64_t n) {
    require_prime_dim(n);
    CMatrix x(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (std::int64_t col = 0; col < n; ++col) x((col + 1) % n, col) = 1.0;
    return x;
}

CMatrix clock_operator(std::int64_t n) {
    require_prime_dim(n);
    CMatrix z(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (std::int64_t q = 0; q < n; ++q) z(q, q) = unit_root(q, n);
    return z;
}

DisplacementLabel::DisplacementLabel(FieldElement a_, FieldElement b_) : a(a_), b(b_) {
    if (a.modulus() != b.modulus()) {
        throw ModulusMismatchError("displacement label components must share a modulus");
    }
}

CMatrix displacement(const DisplacementLabel& label) {
    const std::int64_t n = label.dim();
    const std::int64_t a = label.a.value();
    const std::int64_t b = label.b.value();
    CMatrix d(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    if (n == 2) {
        // Pauli-group phases: i^{ab}; 2^{-1} does not exist in GF(2).
        const cplx phase = unit_root(a * b, 4);
        for (std::int64_t col = 0; col < n; ++col) {
            d((col + a) % n, col) = phase * unit_root(b * col, 2);
        }
        return d;
    }
    const PrimeModulus mod = label.a.modulus();
    const FieldElement sym_phase = -(half(mod) * label.a * label.b);
    for (std::int64_t col = 0; col < n; ++col) {
        // column q of X^a Z^{-b} carries w^{-b q} into row q + a
        const FieldElement exponent = sym_phase - label.b * FieldElement(col, mod);
        d((col + a) % n, col) = unit_root(exponent.value(), n);
    }
    return d;
}

}  // namespace primephase
