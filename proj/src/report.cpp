#include "floorlog/report.hpp"

#include <chrono>
#include <random>

#include "floorlog/config.hpp"
#include "floorlog/errors.hpp"
#include "floorlog/sequence.hpp"

namespace floorlog {

namespace {

Json int_json(const Int& v) {
    if (fits_long(v)) return Json(to_long(v));
    return Json(v.get_str());
}

std::string rat_str(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Json poly_json(const IntPoly& p) {
    Json a = Json::array();
    for (const Int& c : p) a.push_back(int_json(c));
    return a;
}

long long elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

} // namespace

int ExperimentConfig::effective_e_max() const {
    if (e_max >= 0) return e_max;
    int e = 2;
    long long pw = static_cast<long long>(k) * k;
    while (e < 6 && pw * k <= 256) {
        pw *= k;
        ++e;
    }
    return e;
}

Json kernel_report_json(unsigned k, const AlphaSpec& alpha, const RankProfile& profile,
                        std::optional<long> wall_time_ms) {
    Json j;
    j["k"] = k;
    j["alpha"] = alpha.str();
    j["trunc_len"] = profile.trunc_len;
    j["ranks"] = profile.ranks;
    j["stabilized"] = profile.stabilized;
    if (wall_time_ms) j["wall_time_ms"] = *wall_time_ms;
    return j;
}

Json nc_table_json(const NCTermTable& table) {
    Json j;
    j["k"] = table.k;
    j["alpha"] = table.alpha.str();
    j["max_len"] = table.max_len;
    Json terms = Json::array();
    for (const auto& [word, coeff] : table.entries)
        terms.push_back(Json{{"word", word.str()}, {"coeff", int_json(coeff)}});
    j["terms"] = std::move(terms);
    return j;
}

Json rational_function_json(const RationalFunctionQ& f) {
    return Json{{"num", poly_json(f.num())}, {"den", poly_json(f.den())}};
}

Json linear_detector_json(int max_order, const std::optional<LinearRecurrence>& r) {
    Json j;
    j["kind"] = "linear";
    j["bounds"] = Json{{"max_order", max_order}};
    j["found"] = r.has_value();
    if (r) {
        Json coeffs = Json::array();
        for (const Rat& c : r->coeffs) coeffs.push_back(rat_str(c));
        j["parameters"] = Json{{"order", r->order}, {"coeffs", coeffs}, {"valid_from", r->valid_from}};
    }
    j["validated"] = r.has_value();
    return j;
}

Json rational_detector_json(int max_deg, const std::optional<RationalFunctionQ>& f) {
    Json j;
    j["kind"] = "rational";
    j["bounds"] = Json{{"max_deg", max_deg}};
    j["found"] = f.has_value();
    if (f) j["parameters"] = rational_function_json(*f);
    j["validated"] = f.has_value();
    return j;
}

Json period_detector_json(long horizon, const std::optional<PeriodReport>& p) {
    Json j;
    j["kind"] = "period";
    j["bounds"] = Json{{"horizon", horizon}};
    j["found"] = p.has_value();
    if (p) j["parameters"] = Json{{"preperiod", p->preperiod}, {"period", p->period}};
    j["validated"] = p.has_value();
    return j;
}

Json polynomial_detector_json(int max_order, int max_degree,
                              const std::optional<PRecCandidate>& c) {
    Json j;
    j["kind"] = "polynomial";
    j["bounds"] = Json{{"max_order", max_order}, {"max_degree", max_degree}};
    j["found"] = c.has_value();
    if (c) {
        Json polys = Json::array();
        for (const IntPoly& p : c->polys) polys.push_back(poly_json(p));
        j["parameters"] = Json{{"order", c->order}, {"degree", c->degree}, {"polys", polys}};
    }
    j["validated"] = c.has_value();
    return j;
}

namespace {

Json coeffs_section(const ExperimentConfig& cfg) {
    const unsigned k = cfg.k;
    const AlphaSpec& alpha = cfg.alpha;
    RationalFunctionQ rp = rational_part(k, alpha);
    Json rows = Json::array();
    bool all_ok = true;
    Int brute_cap = static_cast<long>(summation_budget());
    for (long m = 0; m <= cfg.m_max; ++m) {
        Json row;
        row["m"] = m;
        bool in_budget = ipow(Int(k), static_cast<unsigned long>(m)) <= brute_cap;
        std::optional<Int> brute;
        if (in_budget) {
            brute = b_bruteforce(k, alpha, m);
            row["b_brute"] = int_json(*brute);
        }
        if (m >= 1) {
            Int closed = b_closed_form(k, alpha, m);
            row["b_closed"] = int_json(closed);
            Rat rc = rp.taylor(m);
            Int ft = floor_k_power(k, alpha, m, Sign::negative, Rounding::floor);
            row["rational_part_coeff"] = rat_str(rc);
            row["floor_term"] = int_json(ft);
            bool match = (!brute || *brute == closed) && Rat(closed) == rc + Rat(ft);
            row["match"] = match;
            all_ok = all_ok && match;
        } else if (brute) {
            all_ok = all_ok && *brute == floor_alpha_plus_log(k, alpha, 0);
        }
        rows.push_back(std::move(row));
    }
    return Json{{"status", "ok"}, {"m_max", cfg.m_max}, {"rows", rows}, {"identity_ok", all_ok}};
}

Json digits_section(const ExperimentConfig& cfg) {
    GTransform gt = g_coefficients(cfg.k, cfg.alpha, cfg.horizon);
    std::vector<int> oracle = digit_oracle(cfg.k, cfg.alpha, cfg.horizon);
    bool match = gt.g == oracle;
    auto period = detect_period(gt.g, cfg.horizon);
    KAlphaClass cls = classify_k_alpha(cfg.k, cfg.alpha);
    Json j;
    j["status"] = "ok";
    j["horizon"] = cfg.horizon;
    j["g"] = gt.g;
    j["oracle"] = oracle;
    j["match"] = match;
    j["period"] = period ? Json{{"preperiod", period->preperiod}, {"period", period->period}}
                         : Json(nullptr);
    j["class"] = cls.rational ? Json{{"rational", true}, {"value", rat_str(cls.value)}}
                              : Json{{"rational", false}};
    return j;
}

// rank must not move when rows are replaced by integer mixtures of rows
bool row_mix_check(const ExperimentConfig& cfg) {
    const unsigned k = cfg.k;
    const int e_mix = std::min(cfg.effective_e_max(), 3);
    const long trunc = std::min(cfg.trunc_len, 512L);
    long long span = trunc;
    for (int e = 0; e < e_mix; ++e) span *= k;
    std::vector<long long> seq = sequence_values_i64(k, cfg.alpha, span);

    std::vector<std::vector<Int>> rows;
    long long stride = 1;
    for (int e = 0; e <= e_mix; ++e) {
        for (long long i = 0; i < stride; ++i) {
            std::vector<Int> row(static_cast<size_t>(trunc));
            for (long n = 0; n < trunc; ++n)
                row[static_cast<size_t>(n)] = static_cast<long>(seq[static_cast<size_t>(i + stride * n)]);
            rows.push_back(std::move(row));
        }
        stride *= k;
    }
    IntRowBasis plain(static_cast<size_t>(trunc));
    for (const auto& r : rows) plain.insert(r);

    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<size_t> pick(0, rows.size() - 1);
    std::uniform_int_distribution<int> coef(1, 3);
    for (size_t i = 0; i < rows.size(); ++i) {
        size_t j = pick(rng);
        int c = coef(rng);
        for (size_t t = 0; t < rows[i].size(); ++t)
            if (j != i) rows[i][t] += c * rows[j][t];
    }
    IntRowBasis mixed(static_cast<size_t>(trunc));
    for (const auto& r : rows) mixed.insert(r);
    return plain.rank() == mixed.rank();
}

Json kernel_section(const ExperimentConfig& cfg, bool with_timing) {
    auto t0 = std::chrono::steady_clock::now();
    RankProfile profile = rank_profile(cfg.k, cfg.alpha, cfg.effective_e_max(), cfg.trunc_len);
    Json j;
    j["status"] = "ok";
    j["e_max"] = cfg.effective_e_max();
    j["trunc_len"] = profile.trunc_len;
    j["ranks"] = profile.ranks;
    j["stabilized"] = profile.stabilized;
    j["verdict"] = profile.stabilized ? "evidence of finite rank (plateau, not proof)"
                                      : "no plateau within e_max (evidence only)";
    j["row_mix_check"] = row_mix_check(cfg);
    if (with_timing) j["wall_time_ms"] = elapsed_ms(t0);
    return j;
}

Json guess_section(const ExperimentConfig& cfg) {
    std::vector<Int> b;
    b.reserve(static_cast<size_t>(cfg.guess_len));
    b.push_back(floor_alpha_plus_log(cfg.k, cfg.alpha, 0));
    for (long m = 1; m < cfg.guess_len; ++m) b.push_back(b_closed_form(cfg.k, cfg.alpha, m));

    Json j;
    j["status"] = "ok";
    j["source"] = "b(0.." + std::to_string(cfg.guess_len - 1) + ")";
    j["linear"] = linear_detector_json(cfg.max_order, guess_linear_recurrence(b, cfg.max_order));
    j["rational"] = rational_detector_json(cfg.max_deg, series_to_rational(b, cfg.max_deg));
    GTransform gt = g_coefficients(cfg.k, cfg.alpha, cfg.horizon);
    std::vector<Int> gd;
    gd.reserve(gt.g.size());
    for (int d : gt.g) gd.emplace_back(d);
    j["polynomial"] = polynomial_detector_json(
        cfg.prec_order, cfg.prec_degree,
        guess_polynomial_recurrence(gd, cfg.prec_order, cfg.prec_degree));
    return j;
}

template <typename Fn>
Json guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const budget_error& e) {
        return Json{{"status", "budget"}, {"message", e.what()}};
    } catch (const error& e) {
        return Json{{"status", "error"}, {"message", e.what()}};
    }
}

} // namespace

Json full_report(const ExperimentConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    Json j;
    j["schema"] = 1;
    j["version"] = kToolVersion;
    j["k"] = cfg.k;
    j["alpha"] = cfg.alpha.str();
    j["seed"] = cfg.seed;
    j["config"] = Json{{"m_max", cfg.m_max},       {"horizon", cfg.horizon},
                       {"e_max", cfg.effective_e_max()}, {"trunc_len", cfg.trunc_len},
                       {"max_order", cfg.max_order}, {"max_deg", cfg.max_deg},
                       {"prec_order", cfg.prec_order}, {"prec_degree", cfg.prec_degree},
                       {"guess_len", cfg.guess_len}};
    j["coeffs"] = guarded([&] { return coeffs_section(cfg); });
    j["digits"] = guarded([&] { return digits_section(cfg); });
    j["kernel"] = guarded([&] { return kernel_section(cfg, cfg.with_timings); });
    j["guess"] = guarded([&] { return guess_section(cfg); });
    if (cfg.with_timings) j["total_wall_time_ms"] = elapsed_ms(t0);
    return j;
}

} // namespace floorlog
