#pragma once

#include <stdexcept>

namespace gridstar {

/// Base class for every error the library raises.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid argument or out-of-contract input (CLI exit code 2).
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// Malformed spec string or input file (CLI exit code 2).
class ParseError : public ArgumentError {
public:
    using ArgumentError::ArgumentError;
};

/// A construction recipe's precondition does not hold for the given weights,
/// e.g. a divergent weight series (CLI exit code 3).
class InfeasibleError : public Error {
public:
    using Error::Error;
};

/// A configured work or size cap would be exceeded (CLI exit code 4).
class ResourceError : public Error {
public:
    using Error::Error;
};

} // namespace gridstar
