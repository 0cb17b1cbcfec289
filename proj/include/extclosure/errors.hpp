#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace extclosure {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed polynomial or ring-definition text. `position` is a 0-based
/// character offset into the offending string.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class AlgebraMismatch : public Error {
public:
    using Error::Error;
};

/// The quotient by the given relations is not finite-dimensional.
class InfiniteDimension : public Error {
public:
    using Error::Error;
};

/// A multiplication table failed the commutative-local-algebra axioms.
class NotLocal : public Error {
public:
    using Error::Error;
};

class EdimTooSmall : public Error {
public:
    using Error::Error;
};

class NotHypersurface : public Error {
public:
    using Error::Error;
};

/// Isomorphism sampling exhausted its budget on a Hom space too large for
/// exhaustive search. Distinct from a negative answer.
class SearchInconclusive : public Error {
public:
    using Error::Error;
};

/// Extension data did not lift through a free cover. Indicates inconsistent
/// chain data upstream, never a mathematical outcome.
class LiftFailure : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A file could not be read or written.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace extclosure
