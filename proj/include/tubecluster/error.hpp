#pragma once

#include <stdexcept>
#include <string>

namespace tubecluster {

/// Bad input: rank mismatch, malformed object, unknown index.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A value that should be a maximal rigid object (or triangulation) is not one.
class StructuralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A mathematical claim checked at runtime turned out false
/// (complement count, path independence, graph shape, ...).
class VerificationFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace tubecluster
