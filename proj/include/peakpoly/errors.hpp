#pragma once

#include <stdexcept>
#include <string>

namespace peakpoly {

// Malformed input: bad positions, out-of-range arguments, unparsable text.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A peak set that no permutation can realize.
class InadmissibleSet : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Brute-force work requested above the configured enumeration cap.
class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two independent computations of the same quantity disagreed.
class Disagreement : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace peakpoly
