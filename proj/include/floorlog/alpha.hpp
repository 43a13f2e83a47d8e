#ifndef FLOORLOG_ALPHA_HPP
#define FLOORLOG_ALPHA_HPP

#include <optional>
#include <string>
#include <utility>

#include "floorlog/arith.hpp"

namespace floorlog {

/// The real parameter of the sequence family, either exactly
///   alpha = r + log_k(p/q)      (r rational, p/q a positive rational)
/// or as a best-effort decimal interval [mid - radius, mid + radius].
///
/// The exact form covers every rational alpha (p = q = 1) and every alpha
/// with k^alpha rational; all floor computations on it are decidable by
/// integer arithmetic. Interval inputs only ever yield certified floors.
class AlphaSpec {
public:
    // alpha = r, purely rational.
    static AlphaSpec rational(Rat r);
    // alpha = r + log_k(p/q), p, q >= 1. The base is supplied per call site.
    static AlphaSpec with_log(Rat r, Int p, Int q);
    // alpha in [mid - radius, mid + radius], radius > 0.
    static AlphaSpec decimal_interval(Rat mid, Rat radius);

    // Textual forms: "a", "a/b", "log(p/q)", "a/b+log(p/q)", "dec:<digits>~<radius>".
    static AlphaSpec parse(const std::string& text);

    bool is_exact() const { return exact_; }
    bool is_pure_rational() const { return exact_ && p_ == 1 && q_ == 1; }

    const Rat& r() const { return r_; }
    const Int& log_num() const { return p_; }
    const Int& log_den() const { return q_; }
    const Rat& interval_mid() const { return mid_; }
    const Rat& interval_radius() const { return radius_; }

    // Same real number, with all factors of k moved from p/q into r.
    // Two exact specs denote the same alpha for base k iff their canonical
    // forms coincide.
    AlphaSpec canonical(unsigned k) const;
    bool same_value(const AlphaSpec& other, unsigned k) const;

    std::string str() const;

private:
    AlphaSpec() = default;

    bool exact_ = true;
    Rat r_ = 0;
    Int p_ = 1, q_ = 1;
    Rat mid_ = 0, radius_ = 0;
};

/// Verdict on whether k^alpha is rational, with the exact value when it is.
struct KAlphaClass {
    bool rational = false;
    Rat value = 0; // meaningful iff rational
};

/// Decide rationality of k^alpha exactly. k^alpha = k^(rn/rd) * p/q is
/// rational iff k^|rn| is a perfect rd-th power of an integer.
/// Interval inputs are rejected: no finite radius decides this.
KAlphaClass classify_k_alpha(unsigned k, const AlphaSpec& alpha);

/// floor(alpha + log_k(n+1)): the unique j with k^(j-alpha) <= n+1 < k^(j+1-alpha),
/// decided by cross-multiplied integer power comparisons. Interval inputs go
/// through certified dyadic bounds with precision doubling (see dyadic.hpp) and
/// throw ambiguous_floor_error when the cap cannot separate integer cells.
Int floor_alpha_plus_log(unsigned k, const AlphaSpec& alpha, const Int& n);

enum class Sign { positive, negative };
enum class Rounding { floor, ceil };

/// floor or ceil of sign * k^(m - frac(alpha)), exact. With
/// frac(alpha) = u/v + log_k(p/q) the positive value is the v-th root of a
/// ratio of integers, so the floor reduces to an integer v-th root; exact
/// integer hits are detected, and ceil(y) = -floor(-y).
Int floor_k_power(unsigned k, const AlphaSpec& alpha, long m, Sign sign, Rounding mode);

/// (floor(alpha), theta) with theta = alpha - floor(alpha) in [0,1).
std::pair<Int, AlphaSpec> floor_and_frac_alpha(unsigned k, const AlphaSpec& alpha);

} // namespace floorlog

#endif
