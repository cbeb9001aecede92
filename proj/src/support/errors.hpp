#pragma once

#include <stdexcept>
#include <string>

namespace bf {

// Error taxonomy shared by every module; the C API maps these to status codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A caller violated a documented precondition.
struct ArgumentError : Error {
    using Error::Error;
};

// The request is well-formed but exceeds a hard size cap (e.g. n > 26).
struct CapacityError : Error {
    using Error::Error;
};

// Malformed text input (truth-table files, netlists, LP files).
struct ParseError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

// A construction failed its mandatory post-verification. `detail` carries
// machine-readable context (ledger provenance, offending values).
struct VerifyError : Error {
    explicit VerifyError(const std::string& what, std::string detail_json = "{}")
        : Error(what), detail(std::move(detail_json)) {}
    std::string detail;
};

}  // namespace bf
