// errors.hpp — exception types shared across the library

#pragma once

#include <stdexcept>

namespace giantatom {

// No step size aligns the grid with the delay and every profile breakpoint.
struct GridError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The integrated amplitude left the physical norm bound (step too coarse).
struct StabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Excitation reached the outer sites of a finite chain.
struct BoundaryLeakError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RangeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace giantatom
