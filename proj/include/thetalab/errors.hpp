#pragma once

#include <stdexcept>
#include <string>

namespace thetalab {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A face given with a repeated vertex.
class MalformedFace : public Error {
public:
    using Error::Error;
};

/// An operation was handed a vertex set that is not a face of the complex.
class NotAFace : public Error {
public:
    using Error::Error;
};

/// Caller violated an operation's documented precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Two independent computations of the same quantity disagreed.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

/// Malformed facet or triangulation file.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace thetalab
