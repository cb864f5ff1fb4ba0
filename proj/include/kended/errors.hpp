#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kended {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed family or operation parameters.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Input exceeds a configured size guard or a hard capacity.
class SizeError : public Error {
public:
    using Error::Error;
};

/// Operation requires a connected graph.
class ConnectivityError : public Error {
public:
    using Error::Error;
};

/// Operation precondition violated (wrong leaves, missing edges, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Tailings requested on a tree without a branch vertex.
class NoBranchVertexError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// An edge exchange produced something that is not a tree on the same vertex set.
class InvalidExchangeError : public Error {
public:
    using Error::Error;
};

/// Rejection sampling ran out of budget.
class SamplingError : public Error {
public:
    using Error::Error;
};

/// Theorem instance with an invalid parameter combination.
class InstanceError : public Error {
public:
    using Error::Error;
};

/// graph6 decoding failure; carries the byte offset of the problem.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " at byte " + std::to_string(offset)), detail_(what), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }
    /// The message without the offset suffix.
    const std::string& detail() const noexcept { return detail_; }

private:
    std::string detail_;
    std::size_t offset_;
};

} // namespace kended
