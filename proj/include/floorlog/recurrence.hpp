#ifndef FLOORLOG_RECURRENCE_HPP
#define FLOORLOG_RECURRENCE_HPP

#include <optional>
#include <vector>

#include "floorlog/arith.hpp"
#include "floorlog/polynomial.hpp"

namespace floorlog {

/// u(m+order) = sum_j coeffs[j-1] * u(m+order-j), exact on every supplied
/// term from valid_from on. All fitting is exact rational arithmetic; a
/// nullopt verdict means no recurrence within the stated bounds fits, never
/// a tolerance judgment.
struct LinearRecurrence {
    int order = 0;
    std::vector<Rat> coeffs;
    long valid_from = 0;
};

/// Minimal-order fit by exact elimination on the shifted-window system.
/// The last 4 terms are held out of the fit and validate the candidate.
/// Requires seq.size() >= 2*max_order + 4.
std::optional<LinearRecurrence> guess_linear_recurrence(const std::vector<Int>& seq,
                                                        int max_order);

/// Reduced rational function with numerator and denominator degree <= max_deg
/// whose Taylor coefficients reproduce every supplied term.
/// Requires seq.size() >= 2*max_deg + 2.
std::optional<RationalFunctionQ> series_to_rational(const std::vector<Int>& seq, int max_deg);

/// Eventual periodicity: digits[i] == digits[i+period] for all
/// preperiod <= i <= horizon-period-1, with the periodic block occurring at
/// least 4 full times (first occurrence plus 3 repetitions), and
/// (preperiod, period) lexicographically minimal.
struct PeriodReport {
    long preperiod = 0;
    long period = 1;
    bool operator==(const PeriodReport&) const = default;
};
std::optional<PeriodReport> detect_period(const std::vector<int>& digits, long horizon);

/// sum_i polys[i](m) * u(m+i) = 0 with deg polys[i] <= degree, not all zero;
/// holds on the fitting window and on the held-out last 8 positions.
struct PRecCandidate {
    int order = 0;
    int degree = 0;
    std::vector<IntPoly> polys; // p_0 .. p_order
};

/// Exact nullspace search over the (order, degree) grid in lexicographic
/// order. Requires seq.size() >= (max_order+1)*(max_degree+1) + max_order + 8.
std::optional<PRecCandidate> guess_polynomial_recurrence(const std::vector<Int>& seq,
                                                         int max_order, int max_degree);

} // namespace floorlog

#endif
