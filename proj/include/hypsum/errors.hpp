#pragma once

#include <stdexcept>
#include <string>

namespace hypsum {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A PiVal with a surviving pi-power was collapsed to a rational.
class NotRational : public Error {
public:
    using Error::Error;
};

/// Terminating series whose lower parameter vanishes inside the summation range.
class InvalidSpec : public Error {
public:
    using Error::Error;
};

/// Gauss closed form with its numerator Gamma at a pole.
class NumeratorPole : public Error {
public:
    using Error::Error;
};

/// A closed form that degenerates to a 0*inf limit at the requested parameters.
class PoleAmbiguity : public Error {
public:
    using Error::Error;
};

class InvalidParams : public Error {
public:
    using Error::Error;
};

/// Floating log-Gamma evaluated at a nonpositive integer.
class PoleError : public Error {
public:
    using Error::Error;
};

/// A Gamma argument outside the half-integer lattice.
class UnsupportedArgument : public Error {
public:
    using Error::Error;
};

/// Corollary table lookup with a shift that has no tabulated form.
class UnsupportedShift : public Error {
public:
    using Error::Error;
};

/// Grid or parameter outside an identity's domain.
class DomainError : public Error {
public:
    using Error::Error;
};

class InternalAlgebra : public Error {
public:
    using Error::Error;
};

}  // namespace hypsum
