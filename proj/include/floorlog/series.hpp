#ifndef FLOORLOG_SERIES_HPP
#define FLOORLOG_SERIES_HPP

#include <iosfwd>
#include <map>
#include <vector>

#include "floorlog/alpha.hpp"
#include "floorlog/arith.hpp"
#include "floorlog/polynomial.hpp"
#include "floorlog/sequence.hpp"

namespace floorlog {

enum class CoeffMethod { brute, closed, projected };

/// Coefficients b(m) of the univariate series sum_n a(n) x^|tau(n)|:
/// b(0) = floor(alpha), b(m) = sum of a(n) over the length-m block.
struct CoeffTable {
    unsigned k;
    AlphaSpec alpha;
    long m_max;
    std::vector<Int> b; // b[m], 0 <= m <= m_max
    CoeffMethod method;
};

/// Direct block summation, a(n) advanced incrementally. O(k^m) terms;
/// guarded by the summation budget.
Int b_bruteforce(unsigned k, const AlphaSpec& alpha, long m);

/// k^(m-1)((k-1)(m+floor(alpha))+1) + 1 - ceil(k^(m-frac(alpha))), m >= 1.
Int b_closed_form(unsigned k, const AlphaSpec& alpha, long m);

CoeffTable coeff_table(unsigned k, const AlphaSpec& alpha, long m_max, CoeffMethod method);

/// k = 2, alpha = 1/2 shortcut: c = floor(2^(m-1/2)) by integer square root
/// of 2^(2m-1), b = (m+1)2^(m-1) - c. Checks the two-block identity
/// b = (m-1)(c - 2^(m-1)) + m(2^m - c) before returning.
struct SpecialCaseK2Half {
    Int c, b;
};
SpecialCaseK2Half b_special_case_k2_half(long m);

/// The closed rational summand of the series:
/// (1-x)(kx + floor(alpha)(1-kx))/(1-kx)^2 + x/(1-x), as one reduced fraction.
/// b(m) = [x^m] rational_part + floor(-k^(m-frac(alpha))) for m >= 1.
RationalFunctionQ rational_part(unsigned k, const AlphaSpec& alpha);

/// g(m) = floor(-k^(m+1-frac(alpha))) - k*floor(-k^(m-frac(alpha))),
/// always a base-k digit. A value outside {0..k-1} is an arithmetic bug and
/// raises internal_error.
struct GTransform {
    unsigned k;
    AlphaSpec alpha;
    long m_max;
    std::vector<int> g; // g[i] = g(i+1), i.e. m = 1..m_max
};
GTransform g_coefficients(unsigned k, const AlphaSpec& alpha, long m_max);

/// Base-k digits of y = frac(-k^(1-frac(alpha))) by an independent route:
/// exact long division when k^alpha is rational, otherwise
/// digit m = floor(k^m y) - k floor(k^(m-1) y) with floors from bisected
/// root extraction on the algebraic form of y. Shares only big-integer
/// primitives with g_coefficients.
std::vector<int> digit_oracle(unsigned k, const AlphaSpec& alpha, long m_max);

/// Coefficient a(n) attached to the word tau(n), for every |tau(n)| <= max_len,
/// ordered by length then radix value (equivalently by n).
struct NCTermTable {
    unsigned k;
    AlphaSpec alpha;
    long max_len;
    std::vector<std::pair<BaseKWord, Int>> entries;
};
NCTermTable nc_series_terms(unsigned k, const AlphaSpec& alpha, long max_len);

/// Collapse all variables to one: b(m) = sum of coefficients over words of
/// length m. Agrees with b_bruteforce on the shared range.
CoeffTable univariate_specialize(const NCTermTable& table);

/// Let the variables commute: multidegree (#0s, ..., #(k-1)s) -> coefficient sum.
std::map<std::vector<int>, Int> commutative_projection(const NCTermTable& table);

/// CSV rows "m,b_brute,b_closed,rational_part_coeff,floor_term,g_m,digit_m".
void write_series_csv(std::ostream& os, unsigned k, const AlphaSpec& alpha, long m_max);

} // namespace floorlog

#endif
