#ifndef HOLARB_REPORT_IO_HPP
#define HOLARB_REPORT_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "holarb/filtration.hpp"
#include "holarb/holonomy.hpp"
#include "holarb/strategy.hpp"

// Text and JSON renderings of every report the CLI emits. Both carry the
// same numeric content: exact rationals rendered as "p/q" in either form.

namespace holarb {

using ReportJson = nlohmann::ordered_json;

std::string render_variable(const FinProbSpace& space, const RandomVariable& f);
ReportJson variable_json(const FinProbSpace& space, const RandomVariable& f);

std::string filtration_report_text(const FiltrationReport& report);
ReportJson filtration_report_json(const FiltrationReport& report);

std::string cocycle_reports_text(const Filtration& filtration,
                                 const std::vector<CocycleReport>& reports);
ReportJson cocycle_reports_json(const Filtration& filtration,
                                const std::vector<CocycleReport>& reports);

std::string distortion_table_text(const Filtration& filtration,
                                  const std::vector<std::string>& arrow_ids);
ReportJson distortion_table_json(const Filtration& filtration,
                                 const std::vector<std::string>& arrow_ids);

std::string holonomy_text(const Filtration& filtration, const Loop& loop,
                          const HolonomyTrace& trace);
ReportJson holonomy_json(const Filtration& filtration, const Loop& loop,
                         const HolonomyTrace& trace);

std::string scan_text(const Filtration& filtration, const std::string& base, std::size_t max_len,
                      const ScanResult& result);
ReportJson scan_json(const Filtration& filtration, const std::string& base, std::size_t max_len,
                     const ScanResult& result);

std::string martingale_report_text(const Filtration& filtration, const MartingaleReport& report);
ReportJson martingale_report_json(const Filtration& filtration, const MartingaleReport& report);

/// Everything the strategy subcommand reports for one loop.
struct StrategyRun {
    std::string mode; // "ab" or "wab"
    Rat epsilon;
    Loop loop;
    std::string loop_label;
    HolonomyReport holonomy;
    Position position;
    StrategyReport report;
    std::vector<RandomVariable> wealth_trace;
    std::optional<AdmissibilityVerdict> admissibility; // nullopt: not declared
};

std::string strategy_run_text(const Filtration& filtration, const StrategyRun& run);
ReportJson strategy_run_json(const Filtration& filtration, const StrategyRun& run);

} // namespace holarb

#endif // HOLARB_REPORT_IO_HPP
