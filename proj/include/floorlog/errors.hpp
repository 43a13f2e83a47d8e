#ifndef FLOORLOG_ERRORS_HPP
#define FLOORLOG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace floorlog {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad textual input (alpha grammar, sequence files).
struct parse_error : error {
    using error::error;
};

// Out-of-contract arguments (e_max too small, too few terms, ...).
struct parameter_error : error {
    using error::error;
};

// A brute-force enumeration would exceed the configured summation budget.
struct budget_error : error {
    using error::error;
};

// A decimal-interval alpha cannot certify a floor within the precision cap.
struct ambiguous_floor_error : error {
    using error::error;
};

// Asked a question a decimal-interval alpha can never answer exactly.
struct undecidable_error : error {
    using error::error;
};

// An internal identity failed; indicates an arithmetic bug, never user error.
struct internal_error : error {
    using error::error;
};

} // namespace floorlog

#endif
