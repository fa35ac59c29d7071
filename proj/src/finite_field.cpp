#include "primephase/finite_field.hpp"

#include <string>

namespace primephase {

namespace {
constexpr std::int64_t kMaxModulus = std::int64_t(1) << 31;
}

PrimeModulus::PrimeModulus(std::int64_t p) : p_(p) {
    if (p >= kMaxModulus) {
        throw NotPrimeError("modulus " + std::to_string(p) + " exceeds supported range (p < 2^31)");
    }
    if (!is_prime(p)) {
        throw NotPrimeError(std::to_string(p) + " is not a prime number");
    }
}

bool PrimeModulus::is_prime(std::int64_t n) noexcept {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::int64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

void FieldElement::require_same_modulus(FieldElement a, FieldElement b) {
    if (a.m_ != b.m_) {
        throw ModulusMismatchError("operands live in GF(" + std::to_string(a.m_.value()) +
                                   ") and GF(" + std::to_string(b.m_.value()) + ")");
    }
}

FieldElement operator/(FieldElement a, FieldElement b) {
    FieldElement::require_same_modulus(a, b);
    return a * inv(b);
}

FieldElement inv(FieldElement a) {
    const std::int64_t p = a.modulus().value();
    if (a.value() == 0) {
        throw ZeroDivisionError("zero has no multiplicative inverse in GF(" + std::to_string(p) + ")");
    }
    // Extended Euclid on (a, p); gcd is 1 since p is prime and a != 0.
    std::int64_t r0 = a.value(), r1 = p;
    std::int64_t s0 = 1, s1 = 0;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        s0 -= q * s1;
        std::swap(s0, s1);
    }
    return FieldElement(s0, a.modulus());
}

FieldElement half(PrimeModulus m) {
    if (m.value() == 2) {
        throw EvenCharacteristicError("2 = 0 in GF(2); 2^{-1} does not exist");
    }
    return inv(FieldElement(2, m));
}

}  // namespace primephase
