#ifndef FLOORLOG_POLYNOMIAL_HPP
#define FLOORLOG_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "floorlog/arith.hpp"

namespace floorlog {

/// Dense integer polynomial, coefficient of x^i at index i, no trailing zeros.
using IntPoly = std::vector<Int>;

IntPoly poly_trim(IntPoly p);
long poly_degree(const IntPoly& p); // -1 for the zero polynomial
IntPoly poly_add(const IntPoly& a, const IntPoly& b);
IntPoly poly_sub(const IntPoly& a, const IntPoly& b);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
Int poly_content(const IntPoly& p);
IntPoly poly_primitive(const IntPoly& p);
/// Primitive gcd over Z (monic Euclid over Q, denominators cleared).
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);
/// Exact division; throws internal_error on a nonzero remainder.
IntPoly poly_divexact(const IntPoly& a, const IntPoly& b);
Rat poly_eval(const IntPoly& p, const Rat& x);
std::string poly_str(const IntPoly& p, const std::string& var = "x");

/// Reduced ratio of integer polynomials. Canonical form: den(0) != 0,
/// gcd(num, den) = 1, gcd of all coefficients across both = 1, den(0) > 0.
class RationalFunctionQ {
public:
    static RationalFunctionQ make(IntPoly num, IntPoly den);

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }

    /// Taylor coefficient [x^m], by the linear recurrence the denominator
    /// imposes on the coefficient stream. Cached; O(deg den) per new term.
    Rat taylor(long m) const;

    std::string str() const;
    bool operator==(const RationalFunctionQ& o) const { return num_ == o.num_ && den_ == o.den_; }

private:
    RationalFunctionQ(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {}
    IntPoly num_, den_;
    mutable std::vector<Rat> taylor_cache_;
};

} // namespace floorlog

#endif
