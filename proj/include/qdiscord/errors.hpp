// errors.hpp: exception hierarchy shared by every qdiscord module

#pragma once

#include <stdexcept>
#include <string>

namespace qdiscord {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A density matrix or parameter set violates Hermiticity, trace or positivity.
class InvalidStateError : public Error {
public:
    using Error::Error;
};

// Arguments outside the validity window of a closed-form expression.
class DomainError : public Error {
public:
    using Error::Error;
};

// Quadrature or root finding failed to reach the requested accuracy.
class NumericError : public Error {
public:
    NumericError(const std::string& what, double achieved)
        : Error(what), achieved_(achieved) {}

    double achieved() const noexcept { return achieved_; }

private:
    double achieved_;
};

}  // namespace qdiscord
