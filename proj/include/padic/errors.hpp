#pragma once

#include <stdexcept>
#include <string>

namespace padic {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: non-prime modulus, mismatched primes, bad precision, parse failures.
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// A formula evaluated outside the set where it is defined.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A Gamma_p denominator vanishes (n = alpha in D^alpha |x|^n and friends).
class ResonanceError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A request for a value the model does not provide (e.g. asymptotics for B not in {1, -1}).
class UnsupportedError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A verification could not be carried out because one of its stages is resonant.
class InconclusiveError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A nonzero series coefficient met a zero denominator.
class StructuralError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A shell series or coefficient series failed to decay.
class DivergenceError : public Error {
public:
    using Error::Error;
};

/// Root bracketing failed. Carries the determinant values at both ends as rendered rationals.
class BracketError : public Error {
public:
    BracketError(const std::string& what, std::string g_lo, std::string g_hi)
        : Error(what), g_lo_(std::move(g_lo)), g_hi_(std::move(g_hi)) {}

    const std::string& g_lo() const noexcept { return g_lo_; }
    const std::string& g_hi() const noexcept { return g_hi_; }

private:
    std::string g_lo_;
    std::string g_hi_;
};

} // namespace padic
