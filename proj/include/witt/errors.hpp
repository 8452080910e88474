#ifndef WITT_ERRORS_HPP
#define WITT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace witt {

// Base of everything thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Violated precondition or impossible request; CLI exit code 1.
class DomainError : public Error {
public:
    using Error::Error;
};

// Malformed textual input; CLI exit code 2.
class ParseError : public Error {
public:
    using Error::Error;
};

class NotDivisible : public DomainError {
public:
    using DomainError::DomainError;
};

// Division by a zero divisor with more than one solution.
class NotUnique : public DomainError {
public:
    using DomainError::DomainError;
};

class NotPIntegral : public DomainError {
public:
    using DomainError::DomainError;
};

class UnsupportedRing : public DomainError {
public:
    using DomainError::DomainError;
};

class NotPrime : public DomainError {
public:
    using DomainError::DomainError;
};

class NotDivisorStable : public DomainError {
public:
    NotDivisorStable(long long divisor, long long element)
        : DomainError("NotDivisorStable: " + std::to_string(divisor) + " divides " +
                      std::to_string(element) + " but is missing from the set"),
          divisor_(divisor), element_(element) {}
    long long divisor() const { return divisor_; }
    long long element() const { return element_; }

private:
    long long divisor_;
    long long element_;
};

class ProfileMismatch : public DomainError {
public:
    using DomainError::DomainError;
};

class RingMismatch : public DomainError {
public:
    using DomainError::DomainError;
};

class IntegralityViolation : public DomainError {
public:
    using DomainError::DomainError;
};

class PIntegralityViolation : public DomainError {
public:
    using DomainError::DomainError;
};

class NotInGhostImage : public DomainError {
public:
    using DomainError::DomainError;
};

class AmbiguousDivision : public DomainError {
public:
    using DomainError::DomainError;
};

class EmptyOutputProfile : public DomainError {
public:
    using DomainError::DomainError;
};

class DivisibilityViolation : public DomainError {
public:
    using DomainError::DomainError;
};

} // namespace witt

#endif
