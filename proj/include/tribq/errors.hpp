#pragma once

#include <stdexcept>
#include <string>

namespace tribq {

/// Index outside the declared domain of a sequence or identity.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class DivisionByZero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Binet evaluation could not be rounded to an integer with confidence.
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class UnsupportedDenominator : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A 2x2 complex matrix that is not of the form [[z, -w], [conj(w), conj(z)]].
class NotInImage : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class UnknownName : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace tribq
