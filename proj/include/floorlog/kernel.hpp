#ifndef FLOORLOG_KERNEL_HPP
#define FLOORLOG_KERNEL_HPP

#include <functional>
#include <vector>

#include "floorlog/alpha.hpp"
#include "floorlog/arith.hpp"

namespace floorlog {

/// One subsequence slot a(k^e n + i), 0 <= i < k^e.
struct KernelIndex {
    int e = 0;
    long long i = 0;
};

/// ranks[e] = exact rank over the rationals of every subsequence row with
/// exponent <= e, each row truncated to trunc_len entries. stabilized means
/// the last three ranks agree; a plateau is evidence of a finitely generated
/// span, never proof, and growth is evidence against.
struct RankProfile {
    long trunc_len = 0;
    std::vector<int> ranks;
    bool stabilized = false;
};

std::vector<Int> kernel_row(unsigned k, const AlphaSpec& alpha, const KernelIndex& idx,
                            long trunc_len);

RankProfile rank_profile(unsigned k, const AlphaSpec& alpha, int e_max, long trunc_len);

/// Same rank engine over an arbitrary exact integer sequence; the provider is
/// consulted for indices up to k^e_max * trunc_len.
RankProfile rank_profile_generic(const std::function<Int(long long)>& seq, unsigned k,
                                 int e_max, long trunc_len);

/// Incremental exact row basis over Z rows (fraction-free reduction, rows kept
/// content-normalized, pivot chosen as the entry of least magnitude). Exposed
/// for the row-mixing consistency checks.
class IntRowBasis {
public:
    explicit IntRowBasis(size_t width) : width_(width) {}

    /// Reduce the row against the basis; insert the remainder when nonzero.
    /// Returns true when the rank grew.
    bool insert(std::vector<Int> row);

    int rank() const { return static_cast<int>(rows_.size()); }

private:
    void normalize(std::vector<Int>& row) const;
    void reduce_at(std::vector<Int>& target, size_t basis_idx) const;

    size_t width_;
    std::vector<std::vector<Int>> rows_;
    std::vector<size_t> pivot_cols_;
};

} // namespace floorlog

#endif
