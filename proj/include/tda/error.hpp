#pragma once

#include <stdexcept>
#include <string>

namespace tda {

enum class ErrorCode {
    // matrix / point cloud loading
    NonSquare,
    AsymmetryTooLarge,
    OutOfRangeEntry,
    NonFiniteEntry,
    WrongKind,
    EmptyCloud,
    BadRadii,
    // rips
    CapacityExceeded,
    // persistence
    TooLarge,
    NoRepresentativeStored,
    InfiniteIntervalUnsupported,
    // landscape
    Unordered,
    NonFinite,
    CapTooSmall,
    EmptyList,
    DegreeMismatch,
    BadP,
    BadGrid,
    // inference
    GroupTooSmall,
    TooFewSamples,
    ObservedNotInNull,
    // embedding
    DisconnectedGraph,
    NoPositiveEigenvalues,
    SizeMismatch,
    // cycles
    NotACycle,
    EdgesMissing,
    NoFiniteInterval,
    // cli / io
    MalformedInput,
    InvalidConfig,
    IoError,
    InvalidArgument,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace tda
