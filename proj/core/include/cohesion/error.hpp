#ifndef COHESION_ERROR_HPP
#define COHESION_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cohesion {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input text contained no words at all.
class EmptyDocumentError : public Error {
public:
    using Error::Error;
};

// Index construction over a stream with zero content tokens.
class EmptyIndexError : public Error {
public:
    using Error::Error;
};

// Count extraction over an invalid position span.
class SpanError : public Error {
public:
    using Error::Error;
};

// Partition handed to the density objective violates its ordering
// or range requirements.
class PartitionError : public Error {
public:
    using Error::Error;
};

// Invalid segmenter or synthesizer configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

// Caller violated a documented calling contract (e.g. unsorted input).
class ContractError : public Error {
public:
    using Error::Error;
};

// File system or encoding problem; message names the offending path.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace cohesion

#endif
