#ifndef ICSI_ERRORS_HPP
#define ICSI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace icsi {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An axis name was not found in a joint distribution.
struct AxisError : Error {
    using Error::Error;
};

/// Overlapping or otherwise malformed axis-group query.
struct QueryError : Error {
    using Error::Error;
};

/// Alphabet mismatch when composing distributions.
struct CompositionError : Error {
    using Error::Error;
};

/// A product space or enumeration exceeded its configured cap.
struct SizeError : Error {
    using Error::Error;
};

/// An operation was invoked on an object that does not satisfy its
/// structural preconditions (wrong permutation, missing map, wrong kind).
struct ConfigError : Error {
    using Error::Error;
};

/// Vertex enumeration beyond the supported dimension.
struct DimensionError : Error {
    using Error::Error;
};

/// A numeric argument outside its domain (e.g. negative gamma).
struct DomainError : Error {
    using Error::Error;
};

/// Parse or schema failure while loading a spec document.
struct ParseError : Error {
    using Error::Error;
};

} // namespace icsi

#endif
