#ifndef FLOORLOG_REPORT_HPP
#define FLOORLOG_REPORT_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "floorlog/alpha.hpp"
#include "floorlog/kernel.hpp"
#include "floorlog/recurrence.hpp"
#include "floorlog/series.hpp"

namespace floorlog {

using Json = nlohmann::ordered_json;

/// One experiment: base, parameter, horizons, detector bounds, output shape.
struct ExperimentConfig {
    unsigned k = 2;
    AlphaSpec alpha = AlphaSpec::rational(Rat(0));
    long m_max = 10;        // coefficient table depth
    long horizon = 64;      // digit stream length
    int e_max = -1;         // kernel exponent cap; -1 picks a base-dependent default
    long trunc_len = 4096;  // kernel row truncation
    int max_order = 20;     // linear recurrence bound
    int max_deg = 8;        // rational function degree bound
    int prec_order = 3;     // polynomial recurrence bounds
    int prec_degree = 3;
    long guess_len = 46;    // terms of b fed to the detectors
    unsigned long long seed = 1;
    std::string format = "text"; // json, csv or text
    bool with_timings = false;   // volatile fields are opt-in, reports are
                                 // byte-identical for a fixed config + seed
    int effective_e_max() const;
};

Json kernel_report_json(unsigned k, const AlphaSpec& alpha, const RankProfile& profile,
                        std::optional<long> wall_time_ms);
Json nc_table_json(const NCTermTable& table);
Json rational_function_json(const RationalFunctionQ& f);
Json linear_detector_json(int max_order, const std::optional<LinearRecurrence>& r);
Json rational_detector_json(int max_deg, const std::optional<RationalFunctionQ>& f);
Json period_detector_json(long horizon, const std::optional<PeriodReport>& p);
Json polynomial_detector_json(int max_order, int max_degree,
                              const std::optional<PRecCandidate>& c);

/// The full bundle: config echo, coefficient identities, digit identities,
/// kernel profile, detector verdicts. Deterministic for a fixed config.
Json full_report(const ExperimentConfig& config);

} // namespace floorlog

#endif
