#pragma once

#include <stdexcept>
#include <string>

namespace simlearn {

/// Caller violated a documented precondition (bad parameter, wrong group, ...).
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Vector dimensions do not line up.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Input data is malformed or unusable (CSV parsing, unseen categories, ...).
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A finite source (permutation sampler, test pair source) ran dry.
struct ExhaustedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace simlearn
