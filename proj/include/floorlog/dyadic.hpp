#ifndef FLOORLOG_DYADIC_HPP
#define FLOORLOG_DYADIC_HPP

#include "floorlog/arith.hpp"

namespace floorlog {

/// Certified enclosure lo <= log_k(x) <= hi with dyadic rational endpoints.
struct DyadicBounds {
    Rat lo, hi;
    bool exact = false; // lo == hi, the log is an exact dyadic hit
};

/// Enclose log_k(num/den) for num, den >= 1 within roughly 2^-prec_bits.
/// Shift-and-square in scaled-integer arithmetic with outward rounding; the
/// enclosure may be wider than requested when a squaring step lands too close
/// to the mantissa boundary, in which case the caller doubles prec_bits.
/// Integer arithmetic only.
DyadicBounds log_k_bounds(unsigned k, const Int& num, const Int& den, unsigned prec_bits);

} // namespace floorlog

#endif
