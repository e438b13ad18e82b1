#pragma once

#include <stdexcept>
#include <string>

namespace plethyx {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A value violates the invariants of its type (e.g. a non-decreasing partition).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A jeu de taquin slide was requested at a cell that is not an inner corner.
class InvalidCorner : public Error {
public:
    using Error::Error;
};

/// A biword or Burge word does not satisfy its ordering invariant.
class MalformedBiword : public Error {
public:
    using Error::Error;
};

/// A rectified two-letter subtableau does not have the shape the sign statistic expects.
class ShapeMismatch : public Error {
public:
    using Error::Error;
};

/// Malformed text or JSON input.
class ParseError : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace plethyx
