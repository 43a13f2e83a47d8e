#include "floorlog/kernel.hpp"

#include <limits>

#include "floorlog/errors.hpp"
#include "floorlog/sequence.hpp"

namespace floorlog {

namespace {

long long span_length(unsigned k, int e_max, long trunc_len) {
    if (e_max < 0 || trunc_len < 1) throw parameter_error("bad kernel parameters");
    long long span = trunc_len;
    for (int e = 0; e < e_max; ++e) {
        if (span > std::numeric_limits<long long>::max() / k)
            throw parameter_error("k^e_max * trunc_len out of range");
        span *= k;
    }
    return span; // k^e_max * trunc_len
}

} // namespace

void IntRowBasis::reduce_at(std::vector<Int>& target, size_t bi) const {
    const size_t pc = pivot_cols_[bi];
    if (target[pc] == 0) return;
    const std::vector<Int>& b = rows_[bi];
    const Int p = b[pc];
    const Int c = target[pc];
    if (p == 1) {
        for (size_t j = 0; j < width_; ++j)
            mpz_submul(target[j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
    } else {
        for (size_t j = 0; j < width_; ++j) {
            mpz_mul(target[j].get_mpz_t(), target[j].get_mpz_t(), p.get_mpz_t());
            mpz_submul(target[j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
        }
    }
}

void IntRowBasis::normalize(std::vector<Int>& row) const {
    Int g = vec_content(row);
    if (g > 1)
        for (Int& x : row) x /= g;
    for (const Int& x : row) {
        if (x == 0) continue;
        if (x < 0)
            for (Int& y : row) y = -y;
        break;
    }
}

bool IntRowBasis::insert(std::vector<Int> row) {
    if (row.size() != width_) throw parameter_error("row width mismatch");
    for (size_t bi = 0; bi < rows_.size(); ++bi) reduce_at(row, bi);
    size_t pivot = width_;
    for (size_t j = 0; j < width_; ++j) {
        if (row[j] == 0) continue;
        if (pivot == width_) {
            pivot = j;
            continue;
        }
        Int a, b;
        mpz_abs(a.get_mpz_t(), row[j].get_mpz_t());
        mpz_abs(b.get_mpz_t(), row[pivot].get_mpz_t());
        if (a < b) pivot = j;
    }
    if (pivot == width_) return false; // dependent
    normalize(row);
    rows_.push_back(std::move(row));
    pivot_cols_.push_back(pivot);
    // keep older rows clear of the new pivot column
    const size_t newest = rows_.size() - 1;
    for (size_t bi = 0; bi + 1 < rows_.size(); ++bi) {
        if (rows_[bi][pivot] == 0) continue;
        std::vector<Int> tmp = std::move(rows_[bi]);
        reduce_at(tmp, newest);
        normalize(tmp);
        rows_[bi] = std::move(tmp);
    }
    return true;
}

std::vector<Int> kernel_row(unsigned k, const AlphaSpec& alpha, const KernelIndex& idx,
                            long trunc_len) {
    if (idx.e < 0) throw parameter_error("kernel exponent must be >= 0");
    long long stride = 1;
    for (int e = 0; e < idx.e; ++e) stride *= k;
    if (idx.i < 0 || idx.i >= stride) throw parameter_error("kernel offset out of range");
    std::vector<Int> row;
    row.reserve(static_cast<size_t>(trunc_len));
    TermStream ts(k, alpha, Int(static_cast<long>(idx.i)));
    long long pos = idx.i;
    for (long n = 0; n < trunc_len; ++n) {
        row.push_back(ts.value());
        if (n + 1 < trunc_len) {
            long long next = idx.i + (n + 1) * stride;
            while (pos < next) {
                ts.advance();
                ++pos;
            }
        }
    }
    return row;
}

namespace {

template <typename At>
RankProfile profile_over(At at, unsigned k, int e_max, long trunc_len) {
    if (e_max < 2) throw parameter_error("stabilization needs e_max >= 2");
    RankProfile profile;
    profile.trunc_len = trunc_len;
    IntRowBasis basis(static_cast<size_t>(trunc_len));
    std::vector<Int> row(static_cast<size_t>(trunc_len));
    long long stride = 1;
    for (int e = 0; e <= e_max; ++e) {
        for (long long i = 0; i < stride; ++i) {
            for (long n = 0; n < trunc_len; ++n) row[static_cast<size_t>(n)] = at(i + stride * n);
            basis.insert(row);
        }
        profile.ranks.push_back(basis.rank());
        stride *= k;
    }
    const auto& r = profile.ranks;
    profile.stabilized =
        r[static_cast<size_t>(e_max)] == r[static_cast<size_t>(e_max - 1)] &&
        r[static_cast<size_t>(e_max - 1)] == r[static_cast<size_t>(e_max - 2)];
    return profile;
}

} // namespace

RankProfile rank_profile(unsigned k, const AlphaSpec& alpha, int e_max, long trunc_len) {
    long long span = span_length(k, e_max, trunc_len);
    std::vector<long long> seq = sequence_values_i64(k, alpha, span);
    return profile_over([&seq](long long idx) { return Int(static_cast<long>(seq[static_cast<size_t>(idx)])); },
                        k, e_max, trunc_len);
}

RankProfile rank_profile_generic(const std::function<Int(long long)>& seq, unsigned k,
                                 int e_max, long trunc_len) {
    long long span = span_length(k, e_max, trunc_len);
    std::vector<Int> values;
    values.reserve(static_cast<size_t>(span));
    for (long long i = 0; i < span; ++i) values.push_back(seq(i));
    return profile_over([&values](long long idx) { return values[static_cast<size_t>(idx)]; }, k,
                        e_max, trunc_len);
}

} // namespace floorlog
