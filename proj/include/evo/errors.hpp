#pragma once

#include <stdexcept>

namespace evo {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DuplicateEdge : public Error {
public:
    using Error::Error;
};

class SelfLoop : public Error {
public:
    using Error::Error;
};

class VertexOutOfRange : public Error {
public:
    using Error::Error;
};

class LengthMismatch : public Error {
public:
    using Error::Error;
};

class InvalidAttachment : public Error {
public:
    using Error::Error;
};

class PoolTooSmall : public Error {
public:
    using Error::Error;
};

class EmptyInput : public Error {
public:
    using Error::Error;
};

class NonPositiveInput : public Error {
public:
    using Error::Error;
};

class TooFewPoints : public Error {
public:
    using Error::Error;
};

/// Invalid run configuration (bad parameter ranges, unknown names).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// File could not be read, written, or parsed.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace evo
