#ifndef FZETA_ERROR_HPP
#define FZETA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fzeta {

// Precondition on a mathematical argument violated (zero polynomial, r <= 0, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Input data is well-formed but inconsistent (e.g. Weil symmetry fails).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Request outside the supported envelope (root system type, rank, group size).
class CapabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A zeta factor was requested at one of its poles.
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

// Exponent or degree bound exceeded during substitution.
class BoundError : public std::length_error {
public:
    using std::length_error::length_error;
};

// Internal identity that must hold by construction did not.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Malformed configuration; `field` is a JSON pointer to the offending entry.
class ConfigError : public std::invalid_argument {
public:
    ConfigError(std::string field, const std::string& what)
        : std::invalid_argument(field + ": " + what)
        , field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

} // namespace fzeta

#endif
