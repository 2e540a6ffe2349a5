#pragma once

#include <stdexcept>
#include <string>

namespace mlc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A constructor was handed inputs that do not define a matroid.
struct ConstructionError : Error {
    using Error::Error;
};

// An operation was handed arguments outside its domain.
struct ArgumentError : Error {
    using Error::Error;
};

// A stated precondition between operations was violated.
struct ContractError : Error {
    using Error::Error;
};

// Input exceeds a hard size budget (64-element ground sets, oracle scans).
struct SizeError : Error {
    using Error::Error;
};

// Operation requires a loopless matroid.
struct LoopError : Error {
    using Error::Error;
};

// A requested object provably does not exist (e.g. k-coloring with k too small).
struct InfeasibleError : Error {
    using Error::Error;
};

// Postcondition failure. Indicates a bug, never bad input.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace mlc
