#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jcsusy {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Index or argument outside its permitted range.
class RangeError : public Error {
public:
    using Error::Error;
};

// Operands with incompatible truncation dimensions.
class DimensionError : public Error {
public:
    using Error::Error;
};

// Truncated Fock space too small for the requested accuracy.
class TruncationError : public Error {
public:
    TruncationError(const std::string& what, std::size_t required_dim)
        : Error(what), required_dim_(required_dim) {}

    std::size_t required_dim() const noexcept { return required_dim_; }

private:
    std::size_t required_dim_;
};

// Hierarchy parameters violating delta^2 + k lambda^2 >= 0 (or a derived
// discriminant). Carries the smallest admissible hierarchy index.
class AdmissibilityError : public Error {
public:
    AdmissibilityError(const std::string& what, long min_k)
        : Error(what), min_k_(min_k) {}

    long min_k() const noexcept { return min_k_; }

private:
    long min_k_;
};

// Quantity undefined at the requested point (zero frequency, failed solver).
class DomainError : public Error {
public:
    using Error::Error;
};

}  // namespace jcsusy
