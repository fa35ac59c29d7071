#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace primephase {

/// Domain error carrying a stable machine-readable name alongside the
/// human-readable message.  The CLI reports the name in its error envelope.
class Error : public std::runtime_error {
  public:
    Error(std::string name, const std::string& message)
        : std::runtime_error(message), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

  private:
    std::string name_;
};

struct NotPrimeError : Error {
    explicit NotPrimeError(const std::string& m) : Error("NotPrime", m) {}
};

struct ModulusMismatchError : Error {
    explicit ModulusMismatchError(const std::string& m) : Error("ModulusMismatch", m) {}
};

struct ZeroDivisionError : Error {
    explicit ZeroDivisionError(const std::string& m) : Error("ZeroDivision", m) {}
};

struct EvenCharacteristicError : Error {
    explicit EvenCharacteristicError(const std::string& m) : Error("EvenCharacteristic", m) {}
};

struct DegenerateBasisError : Error {
    explicit DegenerateBasisError(const std::string& m) : Error("DegenerateBasis", m) {}
};

struct DimensionMismatchError : Error {
    explicit DimensionMismatchError(const std::string& m) : Error("DimensionMismatch", m) {}
};

struct IndexOutOfRangeError : Error {
    explicit IndexOutOfRangeError(const std::string& m) : Error("IndexOutOfRange", m) {}
};

struct WrongBasisError : Error {
    explicit WrongBasisError(const std::string& m) : Error("WrongBasis", m) {}
};

struct NonHermitianInputError : Error {
    explicit NonHermitianInputError(const std::string& m) : Error("NonHermitianInput", m) {}
};

struct InsufficientQuadratureError : Error {
    explicit InsufficientQuadratureError(const std::string& m) : Error("InsufficientQuadrature", m) {}
};

struct BadModeIndexError : Error {
    explicit BadModeIndexError(const std::string& m) : Error("BadModeIndex", m) {}
};

struct SingularMatrixError : Error {
    explicit SingularMatrixError(const std::string& m) : Error("SingularMatrix", m) {}
};

}  // namespace primephase
