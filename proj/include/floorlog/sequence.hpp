#ifndef FLOORLOG_SEQUENCE_HPP
#define FLOORLOG_SEQUENCE_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "floorlog/alpha.hpp"
#include "floorlog/arith.hpp"

namespace floorlog {

/// Base-k digits of n, least significant first; empty for n = 0.
/// The trailing (most significant) digit is never zero.
struct BaseKWord {
    unsigned k = 2;
    std::vector<int> digits;

    Int value() const;
    std::string str() const; // digits LSB-first, '.'-separated when k > 10
    auto operator<=>(const BaseKWord&) const = default;
};

BaseKWord tau(unsigned k, const Int& n);
long tau_length(unsigned k, const Int& n);

struct SequenceWindow {
    unsigned k;
    AlphaSpec alpha;
    Int start;
    std::vector<Int> values; // values[i] = floor(alpha + log_k(start+i+1))
};

/// Streams a(n) = floor(alpha + log_k(n+1)) for consecutive n. For exact
/// alpha each step is one integer comparison against the next jump threshold
/// ceil(k^(j+1-alpha)); jumps are computed by root extraction once per value
/// level. Interval alphas fall back to a certified floor per term.
class TermStream {
public:
    TermStream(unsigned k, const AlphaSpec& alpha, Int start = 0);

    const Int& index() const { return n_; }
    const Int& value() const { return value_; }
    void advance();

private:
    void exact_sync();

    unsigned k_;
    AlphaSpec alpha_;
    Int n_;
    Int value_;
    Int next_threshold_; // smallest x = n+1 with a(n) = value_ + 1 (exact mode)
    Int floor_alpha_ = 0;
    bool exact_;
};

SequenceWindow sequence_terms(unsigned k, const AlphaSpec& alpha, const Int& start, long count);

/// a(0..upto-1) as machine integers; throws if any value does not fit.
std::vector<long long> sequence_values_i64(unsigned k, const AlphaSpec& alpha, long long upto);

/// Values a(n) gathered by word length |tau(n)|: group m = 0 holds a(0),
/// group m >= 1 holds a(n) for k^(m-1) <= n <= k^m - 1, nondecreasing.
std::vector<std::pair<long, std::vector<Int>>>
grouped_by_exponent(unsigned k, const AlphaSpec& alpha, long m_max);

/// CSV rows "n,a,tau_len,tau" for the window.
void write_window_csv(std::ostream& os, const SequenceWindow& w);

} // namespace floorlog

#endif
