#include "floorlog/recurrence.hpp"

#include <algorithm>

#include "floorlog/errors.hpp"
#include "floorlog/linalg.hpp"

namespace floorlog {

std::optional<LinearRecurrence> guess_linear_recurrence(const std::vector<Int>& seq,
                                                        int max_order) {
    if (max_order < 1) throw parameter_error("max_order must be >= 1");
    const long n = static_cast<long>(seq.size());
    if (n < 2L * max_order + 4) throw parameter_error("need at least 2*max_order + 4 terms");
    const long fit_end = n - 4;
    // minimal order first, then the earliest start index; a short head of the
    // sequence may sit outside the recurrence (rational tails with numerator
    // degree >= denominator degree), so valid_from ranges over 0..order
    for (int r = 1; r <= max_order; ++r) {
        for (long s = 0; s <= r; ++s) {
            QMatrix a;
            QRow rhs;
            for (long m = s; m + r < fit_end; ++m) {
                QRow row;
                row.reserve(static_cast<size_t>(r));
                for (int j = 1; j <= r; ++j)
                    row.emplace_back(seq[static_cast<size_t>(m + r - j)]);
                a.push_back(std::move(row));
                rhs.emplace_back(seq[static_cast<size_t>(m + r)]);
            }
            if (static_cast<long>(a.size()) < r) break;
            auto sol = solve_linear(std::move(a), std::move(rhs));
            if (!sol) continue;
            bool ok = true;
            for (long m = s; ok && m + r < n; ++m) {
                Rat acc = 0;
                for (int j = 1; j <= r; ++j)
                    acc += (*sol)[static_cast<size_t>(j - 1)] *
                           Rat(seq[static_cast<size_t>(m + r - j)]);
                ok = acc == Rat(seq[static_cast<size_t>(m + r)]);
            }
            if (ok) return LinearRecurrence{r, std::move(*sol), s};
        }
    }
    return std::nullopt;
}

std::optional<RationalFunctionQ> series_to_rational(const std::vector<Int>& seq, int max_deg) {
    if (max_deg < 0) throw parameter_error("max_deg must be >= 0");
    const long n = static_cast<long>(seq.size());
    if (n < 2L * max_deg + 2) throw parameter_error("need at least 2*max_deg + 2 terms");
    for (int r = 0; r <= max_deg; ++r) {
        // denominator 1 + d_1 x + ... + d_r x^r must annihilate every
        // coefficient of U*D past degree max_deg
        QMatrix a;
        QRow rhs;
        for (long m = max_deg + 1; m < n; ++m) {
            QRow row;
            row.reserve(static_cast<size_t>(r));
            for (int j = 1; j <= r; ++j) row.emplace_back(seq[static_cast<size_t>(m - j)]);
            a.push_back(std::move(row));
            rhs.emplace_back(-Rat(seq[static_cast<size_t>(m)]));
        }
        auto sol = solve_linear(std::move(a), std::move(rhs));
        if (!sol) continue;
        // clear denominators of D, then N = trunc(U * D) is integral
        Int scale = 1;
        for (const Rat& d : *sol) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), d.get_den().get_mpz_t());
        IntPoly den(static_cast<size_t>(r) + 1);
        den[0] = scale;
        for (int j = 1; j <= r; ++j) {
            Rat s = (*sol)[static_cast<size_t>(j - 1)] * Rat(scale);
            den[static_cast<size_t>(j)] = s.get_num();
        }
        IntPoly num(static_cast<size_t>(max_deg) + 1, Int(0));
        for (long m = 0; m <= max_deg; ++m)
            for (int j = 0; j <= r && j <= m; ++j)
                num[static_cast<size_t>(m)] += den[static_cast<size_t>(j)] * seq[static_cast<size_t>(m - j)];
        RationalFunctionQ f = RationalFunctionQ::make(std::move(num), std::move(den));
        bool ok = true;
        for (long m = 0; ok && m < n; ++m) ok = f.taylor(m) == Rat(seq[static_cast<size_t>(m)]);
        if (ok) return f;
    }
    return std::nullopt;
}

std::optional<PeriodReport> detect_period(const std::vector<int>& digits, long horizon) {
    if (horizon < 8) throw parameter_error("horizon must be >= 8");
    if (static_cast<long>(digits.size()) < horizon)
        throw parameter_error("fewer digits than the requested horizon");
    for (long s = 0; s < horizon; ++s) {
        const long max_p = (horizon - s) / 4; // block plus three repetitions
        for (long p = 1; p <= max_p; ++p) {
            bool ok = true;
            for (long i = s; ok && i + p < horizon; ++i)
                ok = digits[static_cast<size_t>(i)] == digits[static_cast<size_t>(i + p)];
            if (ok) return PeriodReport{s, p};
        }
    }
    return std::nullopt;
}

namespace {

// deterministic normalization: integer coefficients, joint content 1,
// first nonzero coefficient (in p_0, p_1, ... order) positive
std::vector<IntPoly> clear_candidate(const QRow& v, int order, int degree) {
    Int scale = 1;
    for (const Rat& c : v) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Int> all;
    all.reserve(v.size());
    for (const Rat& c : v) {
        Rat s = c * Rat(scale);
        all.push_back(s.get_num());
    }
    Int g = vec_content(all);
    if (g > 1)
        for (Int& x : all) x /= g;
    for (const Int& x : all) {
        if (x == 0) continue;
        if (x < 0)
            for (Int& y : all) y = -y;
        break;
    }
    std::vector<IntPoly> polys;
    polys.reserve(static_cast<size_t>(order) + 1);
    for (int i = 0; i <= order; ++i) {
        IntPoly p(all.begin() + static_cast<long>(i) * (degree + 1),
                  all.begin() + static_cast<long>(i + 1) * (degree + 1));
        polys.push_back(poly_trim(std::move(p)));
    }
    return polys;
}

} // namespace

std::optional<PRecCandidate> guess_polynomial_recurrence(const std::vector<Int>& seq,
                                                         int max_order, int max_degree) {
    if (max_order < 1 || max_degree < 0) throw parameter_error("bad recurrence bounds");
    const long n = static_cast<long>(seq.size());
    if (n < static_cast<long>(max_order + 1) * (max_degree + 1) + max_order + 8)
        throw parameter_error("too few terms for the requested bounds");
    for (int rho = 1; rho <= max_order; ++rho) {
        for (int d = 0; d <= max_degree; ++d) {
            const long ncoef = static_cast<long>(rho + 1) * (d + 1);
            const long fit_rows = n - 8 - rho;
            if (fit_rows < ncoef) continue;
            QMatrix a;
            a.reserve(static_cast<size_t>(fit_rows));
            for (long m = 0; m < fit_rows; ++m) {
                QRow row;
                row.reserve(static_cast<size_t>(ncoef));
                for (int i = 0; i <= rho; ++i) {
                    Int mp = 1;
                    for (int j = 0; j <= d; ++j) {
                        row.emplace_back(mp * seq[static_cast<size_t>(m + i)]);
                        mp *= m;
                    }
                }
                a.push_back(std::move(row));
            }
            for (const QRow& v : nullspace_basis(std::move(a))) {
                bool ok = true;
                for (long m = fit_rows; ok && m + rho < n; ++m) {
                    Rat acc = 0;
                    size_t col = 0;
                    for (int i = 0; i <= rho; ++i) {
                        Int mp = 1;
                        for (int j = 0; j <= d; ++j) {
                            acc += v[col++] * Rat(mp * seq[static_cast<size_t>(m + i)]);
                            mp *= m;
                        }
                    }
                    ok = acc == 0;
                }
                if (ok) return PRecCandidate{rho, d, clear_candidate(v, rho, d)};
            }
        }
    }
    return std::nullopt;
}

} // namespace floorlog
