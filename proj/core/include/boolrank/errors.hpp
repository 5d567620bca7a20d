#pragma once

#include <stdexcept>
#include <string>

namespace boolrank {

// Malformed input: bad matrix/graph text, invalid selectors, out-of-range
// positions. Maps to exit code 2 at the CLI.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Request exceeds an exact solver's supported size, or an exact integer
// result does not fit the reported type. Maps to exit code 3 at the CLI.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace boolrank
