#include "floorlog/sequence.hpp"

#include <ostream>

#include "floorlog/config.hpp"
#include "floorlog/errors.hpp"

namespace floorlog {

Int BaseKWord::value() const {
    Int v = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) v = v * k + *it;
    return v;
}

std::string BaseKWord::str() const {
    std::string s;
    for (size_t i = 0; i < digits.size(); ++i) {
        if (i > 0 && k > 10) s += '.';
        s += std::to_string(digits[i]);
    }
    return s;
}

BaseKWord tau(unsigned k, const Int& n) {
    if (k < 2) throw parameter_error("base k must be >= 2");
    if (n < 0) throw parameter_error("n must be >= 0");
    BaseKWord w{k, {}};
    Int m = n;
    while (m != 0) {
        Int q, r;
        mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), k);
        w.digits.push_back(static_cast<int>(r.get_ui()));
        m = q;
    }
    return w;
}

long tau_length(unsigned k, const Int& n) {
    if (k < 2) throw parameter_error("base k must be >= 2");
    if (n < 0) throw parameter_error("n must be >= 0");
    long len = 0;
    Int pw = 1;
    while (pw <= n) {
        pw *= k;
        ++len;
    }
    return len;
}

TermStream::TermStream(unsigned k, const AlphaSpec& alpha, Int start)
    : k_(k), alpha_(alpha), n_(std::move(start)), exact_(alpha.is_exact()) {
    if (n_ < 0) throw parameter_error("start must be >= 0");
    value_ = floor_alpha_plus_log(k_, alpha_, n_);
    if (exact_) {
        floor_alpha_ = floor_alpha_plus_log(k_, alpha_, 0);
        exact_sync();
    }
}

void TermStream::exact_sync() {
    // smallest x with a(x-1) >= value_+1 is ceil(k^(value_+1-alpha))
    Int m = value_ + 1 - floor_alpha_;
    if (!fits_long(m)) throw parameter_error("sequence value out of supported range");
    next_threshold_ = floor_k_power(k_, alpha_, to_long(m), Sign::positive, Rounding::ceil);
}

void TermStream::advance() {
    ++n_;
    if (!exact_) {
        value_ = floor_alpha_plus_log(k_, alpha_, n_);
        return;
    }
    if (n_ + 1 >= next_threshold_) {
        ++value_;
        exact_sync();
    }
}

SequenceWindow sequence_terms(unsigned k, const AlphaSpec& alpha, const Int& start, long count) {
    if (count < 0) throw parameter_error("count must be >= 0");
    SequenceWindow w{k, alpha, start, {}};
    w.values.reserve(static_cast<size_t>(count));
    if (count == 0) return w;
    TermStream ts(k, alpha, start);
    for (long i = 0; i < count; ++i) {
        w.values.push_back(ts.value());
        ts.advance();
    }
    return w;
}

std::vector<long long> sequence_values_i64(unsigned k, const AlphaSpec& alpha, long long upto) {
    std::vector<long long> out;
    out.reserve(static_cast<size_t>(upto));
    if (upto <= 0) return out;
    TermStream ts(k, alpha, 0);
    for (long long n = 0; n < upto; ++n) {
        const Int& v = ts.value();
        if (!fits_long(v)) throw parameter_error("sequence value does not fit a machine word");
        out.push_back(to_long(v));
        ts.advance();
    }
    return out;
}

std::vector<std::pair<long, std::vector<Int>>>
grouped_by_exponent(unsigned k, const AlphaSpec& alpha, long m_max) {
    if (m_max < 1) throw parameter_error("m_max must be >= 1");
    Int span = ipow(Int(k), static_cast<unsigned long>(m_max));
    if (span > Int(static_cast<long>(summation_budget())))
        throw budget_error("grouped_by_exponent: k^m_max exceeds the summation budget");

    std::vector<std::pair<long, std::vector<Int>>> groups;
    TermStream ts(k, alpha, 0);
    groups.push_back({0, {ts.value()}});
    ts.advance();
    Int group_end = 1; // group m covers n in [k^(m-1), k^m - 1]
    for (long m = 1; m <= m_max; ++m) {
        group_end *= k;
        std::vector<Int> vals;
        while (ts.index() < group_end) {
            vals.push_back(ts.value());
            ts.advance();
        }
        groups.push_back({m, std::move(vals)});
    }
    return groups;
}

void write_window_csv(std::ostream& os, const SequenceWindow& w) {
    os << "n,a,tau_len,tau\n";
    Int n = w.start;
    for (const Int& v : w.values) {
        BaseKWord word = tau(w.k, n);
        os << n.get_str() << ',' << v.get_str() << ',' << word.digits.size() << ','
           << word.str() << '\n';
        ++n;
    }
}

} // namespace floorlog
