#pragma once
// Error taxonomy shared across the library. ValidationError covers malformed
// user input (documents, configurations, queries). ProtocolError covers
// sequencing faults detected while applying gates, such as a walker arriving
// at a gate in a state the protocol can never produce. InternalError marks
// conditions that indicate a bug in the engine rather than bad input.

#include <stdexcept>
#include <string>

namespace qwram {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidationError : Error {
    using Error::Error;
};

struct ProtocolError : Error {
    using Error::Error;
};

struct InternalError : Error {
    using Error::Error;
};

}  // namespace qwram
