#pragma once

#include <cstdint>

#include "primephase/errors.hpp"

namespace primephase {

/// Prime modulus p of the field GF(p).  Primality is established by trial
/// division at construction time; the supported range is 2 <= p < 2^31 so
/// that products of canonical residues fit in a 64-bit integer.
class PrimeModulus {
  public:
    explicit PrimeModulus(std::int64_t p);

    std::int64_t value() const noexcept { return p_; }

    friend bool operator==(PrimeModulus, PrimeModulus) noexcept = default;

    static bool is_prime(std::int64_t n) noexcept;

  private:
    std::int64_t p_;
};

/// Residue in GF(p), held in canonical form 0 <= value < p.  Arbitrary
/// (including negative) integers are reduced on construction.  Binary
/// operations throw ModulusMismatch unless both operands share a modulus.
class FieldElement {
  public:
    FieldElement(std::int64_t value, PrimeModulus modulus) noexcept
        : v_(reduce(value, modulus.value())), m_(modulus) {}

    std::int64_t value() const noexcept { return v_; }
    PrimeModulus modulus() const noexcept { return m_; }

    friend bool operator==(FieldElement, FieldElement) noexcept = default;

    friend FieldElement operator+(FieldElement a, FieldElement b) {
        require_same_modulus(a, b);
        return FieldElement(a.v_ + b.v_, a.m_);
    }

    friend FieldElement operator-(FieldElement a) noexcept {
        return FieldElement(a.m_.value() - a.v_, a.m_);
    }

    friend FieldElement operator-(FieldElement a, FieldElement b) {
        require_same_modulus(a, b);
        return a + (-b);
    }

    friend FieldElement operator*(FieldElement a, FieldElement b) {
        require_same_modulus(a, b);
        return FieldElement(a.v_ * b.v_, a.m_);
    }

    /// a / b = a * inv(b); throws ZeroDivision when b == 0.
    friend FieldElement operator/(FieldElement a, FieldElement b);

  private:
    static std::int64_t reduce(std::int64_t v, std::int64_t p) noexcept {
        std::int64_t r = v % p;
        return r < 0 ? r + p : r;
    }

    static void require_same_modulus(FieldElement a, FieldElement b);

    std::int64_t v_;
    PrimeModulus m_;
};

/// Multiplicative inverse by the extended Euclidean algorithm.
/// Throws ZeroDivision for the zero element.
FieldElement inv(FieldElement a);

/// The element 2^{-1} mod p, i.e. the x with 2x = 1 (mod p).
/// Throws EvenCharacteristic for p = 2.
FieldElement half(PrimeModulus m);

}  // namespace primephase
