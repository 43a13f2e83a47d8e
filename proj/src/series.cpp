#include "floorlog/series.hpp"

#include <ostream>

#include "floorlog/config.hpp"
#include "floorlog/errors.hpp"

namespace floorlog {

Int b_bruteforce(unsigned k, const AlphaSpec& alpha, long m) {
    if (m < 0) throw parameter_error("m must be >= 0");
    if (m == 0) return floor_alpha_plus_log(k, alpha, 0);
    Int block_end = ipow(Int(k), static_cast<unsigned long>(m));
    if (block_end > Int(static_cast<long>(summation_budget())))
        throw budget_error("b_bruteforce: k^m exceeds the summation budget (" +
                           std::to_string(summation_budget()) + " terms)");
    Int block_start = block_end / k;
    long long terms = to_long(Int(block_end - block_start));

    TermStream ts(k, alpha, block_start);
    Int total = 0;
    long long chunk = 0;
    constexpr long long kChunkGuard = 1LL << 60;
    for (long long i = 0; i < terms; ++i) {
        const Int& v = ts.value();
        if (fits_long(v)) {
            chunk += to_long(v);
            if (chunk > kChunkGuard || chunk < -kChunkGuard) {
                total += static_cast<long>(chunk);
                chunk = 0;
            }
        } else {
            total += v;
        }
        ts.advance();
    }
    total += static_cast<long>(chunk);
    return total;
}

Int b_closed_form(unsigned k, const AlphaSpec& alpha, long m) {
    if (m < 1) throw parameter_error("b_closed_form needs m >= 1; b(0) = floor(alpha)");
    Int fl = floor_alpha_plus_log(k, alpha, 0);
    Int lead = ipow(Int(k), static_cast<unsigned long>(m - 1));
    Int ceil_term = floor_k_power(k, alpha, m, Sign::positive, Rounding::ceil);
    return lead * ((k - 1) * (m + fl) + 1) + 1 - ceil_term;
}

CoeffTable coeff_table(unsigned k, const AlphaSpec& alpha, long m_max, CoeffMethod method) {
    if (m_max < 0) throw parameter_error("m_max must be >= 0");
    if (method == CoeffMethod::projected)
        throw parameter_error("projected tables come from univariate_specialize");
    CoeffTable t{k, alpha, m_max, {}, method};
    t.b.reserve(static_cast<size_t>(m_max) + 1);
    t.b.push_back(floor_alpha_plus_log(k, alpha, 0));
    for (long m = 1; m <= m_max; ++m)
        t.b.push_back(method == CoeffMethod::brute ? b_bruteforce(k, alpha, m)
                                                   : b_closed_form(k, alpha, m));
    return t;
}

SpecialCaseK2Half b_special_case_k2_half(long m) {
    if (m < 1) throw parameter_error("m must be >= 1");
    Int c = iroot_floor(ipow(Int(2), static_cast<unsigned long>(2 * m - 1)), 2);
    Int half_block = ipow(Int(2), static_cast<unsigned long>(m - 1));
    Int b = (m + 1) * half_block - c;
    Int two_block = (m - 1) * (c - half_block) + m * (2 * half_block - c);
    if (b != two_block) throw internal_error("two-block identity failed at m=" + std::to_string(m));
    return {c, b};
}

RationalFunctionQ rational_part(unsigned k, const AlphaSpec& alpha) {
    Int fl = floor_alpha_plus_log(k, alpha, 0);
    long kk = static_cast<long>(k);
    // (1-x)(kx + fl(1-kx)) = fl + (k - fl k - fl) x - (k - fl k) x^2
    IntPoly num1 = {fl, Int(kk) - fl * kk - fl, -(Int(kk) - fl * kk)};
    IntPoly den1 = {Int(1), Int(-2 * kk), Int(kk) * kk}; // (1-kx)^2
    IntPoly one_minus_x = {Int(1), Int(-1)};
    // num1/den1 + x/(1-x) over the common denominator den1*(1-x)
    IntPoly num = poly_add(poly_mul(num1, one_minus_x), poly_mul({Int(0), Int(1)}, den1));
    IntPoly den = poly_mul(den1, one_minus_x);
    return RationalFunctionQ::make(std::move(num), std::move(den));
}

GTransform g_coefficients(unsigned k, const AlphaSpec& alpha, long m_max) {
    if (m_max < 0) throw parameter_error("m_max must be >= 0");
    GTransform t{k, alpha, m_max, {}};
    t.g.reserve(static_cast<size_t>(m_max));
    Int prev = floor_k_power(k, alpha, 1, Sign::negative, Rounding::floor);
    for (long m = 1; m <= m_max; ++m) {
        Int cur = floor_k_power(k, alpha, m + 1, Sign::negative, Rounding::floor);
        Int g = cur - k * prev;
        if (g < 0 || g >= k)
            throw internal_error("g(" + std::to_string(m) + ") = " + g.get_str() +
                                 " is not a base-" + std::to_string(k) + " digit");
        t.g.push_back(static_cast<int>(g.get_ui()));
        prev = cur;
    }
    return t;
}

namespace {

// Root extraction for the oracle path, deliberately not shared with
// floor_k_power: galloping bisection for the least s with s^v * den >= num.
Int bisect_ceil_root(const Int& num, const Int& den, unsigned long v) {
    if (num <= 0) return 0;
    Int hi = 1;
    while (ipow(hi, v) * den < num) hi <<= 1;
    Int lo = hi >> 1; // invariant: lo^v * den < num <= hi^v * den
    while (hi - lo > 1) {
        Int mid = (lo + hi) >> 1;
        if (ipow(mid, v) * den < num)
            lo = mid;
        else
            hi = mid;
    }
    return hi;
}

} // namespace

std::vector<int> digit_oracle(unsigned k, const AlphaSpec& alpha, long m_max) {
    if (m_max < 0) throw parameter_error("m_max must be >= 0");
    KAlphaClass cls = classify_k_alpha(k, alpha);
    auto [fl, theta] = floor_and_frac_alpha(k, alpha);
    std::vector<int> digits;
    digits.reserve(static_cast<size_t>(m_max));

    if (cls.rational) {
        // k^theta = k^alpha * k^(-floor(alpha)) is rational, so y is too;
        // plain long division produces the digits.
        Rat k_theta = cls.value;
        if (fl >= 0)
            k_theta /= Rat(ipow(Int(k), fl.get_ui()));
        else
            k_theta *= Rat(ipow(Int(k), Int(-fl).get_ui()));
        Rat w = Rat(static_cast<long>(k)) / k_theta;
        Rat y = -w - Rat(rat_floor(-w));
        y.canonicalize();
        Int rem = y.get_num();
        const Int den = y.get_den();
        for (long m = 1; m <= m_max; ++m) {
            rem *= k;
            Int d = fdiv(rem, den);
            rem -= d * den;
            if (d < 0 || d >= k) throw internal_error("digit_oracle: long division out of range");
            digits.push_back(static_cast<int>(d.get_ui()));
        }
        return digits;
    }

    // irrational: y = ceil(w) - w with w = k^(1-theta), and
    // floor(k^m y) = k^m ceil(w) - ceil(k^(m+1-theta))
    const Int u = theta.r().get_num();
    if (!fits_ulong(theta.r().get_den()))
        throw parameter_error("alpha denominator out of supported range");
    const unsigned long v = theta.r().get_den().get_ui();
    const Int& p = theta.log_num();
    const Int& q = theta.log_den();
    auto ceil_power = [&](long e) {
        // ceil(k^(e - theta)) = ceil((k^(ev-u) q^v / p^v)^(1/v))
        Int ee = Int(e) * static_cast<long>(v) - u;
        Int num = ipow(q, v);
        Int den = ipow(p, v);
        if (ee >= 0)
            num *= ipow(Int(k), ee.get_ui());
        else
            den *= ipow(Int(k), Int(-ee).get_ui());
        return bisect_ceil_root(num, den, v);
    };
    const Int cw = ceil_power(1);
    Int prev = 0; // floor(k^0 y) = 0 for y in (0,1)
    Int kpow = 1;
    for (long m = 1; m <= m_max; ++m) {
        kpow *= k;
        Int cur = kpow * cw - ceil_power(m + 1);
        Int d = cur - k * prev;
        if (d < 0 || d >= k) throw internal_error("digit_oracle: root extraction out of range");
        digits.push_back(static_cast<int>(d.get_ui()));
        prev = cur;
    }
    return digits;
}

NCTermTable nc_series_terms(unsigned k, const AlphaSpec& alpha, long max_len) {
    if (max_len < 0) throw parameter_error("max_len must be >= 0");
    Int words = ipow(Int(k), static_cast<unsigned long>(max_len));
    if (words > Int(static_cast<long>(summation_budget())))
        throw budget_error("nc_series_terms: k^max_len exceeds the summation budget");
    NCTermTable t{k, alpha, max_len, {}};
    t.entries.reserve(static_cast<size_t>(to_long(words)));
    TermStream ts(k, alpha, 0);
    for (Int n = 0; n < words; ++n) {
        t.entries.emplace_back(tau(k, n), ts.value());
        ts.advance();
    }
    return t;
}

CoeffTable univariate_specialize(const NCTermTable& table) {
    CoeffTable t{table.k, table.alpha, table.max_len, {}, CoeffMethod::projected};
    t.b.assign(static_cast<size_t>(table.max_len) + 1, Int(0));
    for (const auto& [word, coeff] : table.entries) t.b[word.digits.size()] += coeff;
    return t;
}

std::map<std::vector<int>, Int> commutative_projection(const NCTermTable& table) {
    std::map<std::vector<int>, Int> proj;
    for (const auto& [word, coeff] : table.entries) {
        std::vector<int> multidegree(table.k, 0);
        for (int d : word.digits) ++multidegree[static_cast<size_t>(d)];
        proj[multidegree] += coeff;
    }
    return proj;
}

void write_series_csv(std::ostream& os, unsigned k, const AlphaSpec& alpha, long m_max) {
    os << "m,b_brute,b_closed,rational_part_coeff,floor_term,g_m,digit_m\n";
    RationalFunctionQ rp = rational_part(k, alpha);
    GTransform gt = g_coefficients(k, alpha, m_max);
    std::vector<int> od = digit_oracle(k, alpha, m_max);
    for (long m = 0; m <= m_max; ++m) {
        os << m << ',' << b_bruteforce(k, alpha, m).get_str();
        if (m == 0) {
            os << ",,,,,\n";
            continue;
        }
        Rat rc = rp.taylor(m);
        Int ft = floor_k_power(k, alpha, m, Sign::negative, Rounding::floor);
        os << ',' << b_closed_form(k, alpha, m).get_str() << ',' << rc.get_num().get_str()
           << ',' << ft.get_str() << ',' << gt.g[static_cast<size_t>(m - 1)] << ','
           << od[static_cast<size_t>(m - 1)] << '\n';
    }
}

} // namespace floorlog
