#include "holarb/report_io.hpp"

#include <iomanip>
#include <sstream>

namespace holarb {

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

// space of t_{k-1}, the carrier of h_k, for the 1-based leg index k
const FinProbSpace& leg_space(const Filtration& filtration, const Loop& loop, std::size_t k) {
    const Arrow& arrow = filtration.category().arrow(loop.path.arrows[k - 1]);
    return filtration.space_of(arrow.src);
}

class Table {
public:
    explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

    void row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

    std::string str() const {
        std::vector<std::size_t> width(header_.size(), 0);
        auto widen = [&](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i)
                width[i] = std::max(width[i], cells[i].size());
        };
        widen(header_);
        for (const auto& r : rows_) widen(r);
        std::ostringstream out;
        auto emit = [&](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i) out << "  ";
                out << std::left << std::setw(static_cast<int>(width[i])) << cells[i];
            }
            out << "\n";
        };
        emit(header_);
        for (const auto& r : rows_) emit(r);
        return out.str();
    }

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

} // namespace

std::string render_variable(const FinProbSpace& space, const RandomVariable& f) {
    std::string out = "{";
    for (std::size_t x = 0; x < space.size(); ++x) {
        if (x) out += ", ";
        out += space.points[x] + ": " + to_string(f.values[x]);
    }
    return out + "}";
}

ReportJson variable_json(const FinProbSpace& space, const RandomVariable& f) {
    ReportJson out = ReportJson::object();
    for (std::size_t x = 0; x < space.size(); ++x) out[space.points[x]] = to_string(f.values[x]);
    return out;
}

std::string filtration_report_text(const FiltrationReport& report) {
    Table table({"arrow", "shape", "null-preserving", "note"});
    for (const auto& check : report.arrows)
        table.row({check.arrow_id, check.shape_ok ? "ok" : "FAIL",
                   check.null_preserving ? "ok" : "FAIL", check.message});
    return table.str() + "verdict: " + (report.ok ? "valid" : "INVALID") + "\n";
}

ReportJson filtration_report_json(const FiltrationReport& report) {
    ReportJson arrows = ReportJson::array();
    for (const auto& check : report.arrows)
        arrows.push_back(ReportJson{{"arrow", check.arrow_id},
                                    {"shape_ok", check.shape_ok},
                                    {"null_preserving", check.null_preserving},
                                    {"note", check.message}});
    return ReportJson{{"arrows", std::move(arrows)}, {"ok", report.ok}};
}

std::string cocycle_reports_text(const Filtration& filtration,
                                 const std::vector<CocycleReport>& reports) {
    Table table({"pair", "residual", "ok"});
    for (const auto& report : reports) {
        const Arrow& first = filtration.category().arrow(report.first_arrow);
        const FinProbSpace& base = filtration.space_of(first.src);
        table.row({report.first_arrow + "," + report.second_arrow,
                   render_variable(base, report.residual), report.ok ? "ok" : "FAIL"});
    }
    return table.str();
}

ReportJson cocycle_reports_json(const Filtration& filtration,
                                const std::vector<CocycleReport>& reports) {
    ReportJson out = ReportJson::array();
    for (const auto& report : reports) {
        const Arrow& first = filtration.category().arrow(report.first_arrow);
        const FinProbSpace& base = filtration.space_of(first.src);
        out.push_back(ReportJson{{"pair", ReportJson::array({report.first_arrow, report.second_arrow})},
                                 {"composite", variable_json(base, report.composite)},
                                 {"transported", variable_json(base, report.transported)},
                                 {"residual", variable_json(base, report.residual)},
                                 {"ok", report.ok}});
    }
    return out;
}

std::string distortion_table_text(const Filtration& filtration,
                                  const std::vector<std::string>& arrow_ids) {
    Table table({"arrow", "src", "dst", "dF"});
    for (const auto& id : arrow_ids) {
        const Arrow& arrow = filtration.category().arrow(id);
        table.row({id, arrow.src, arrow.dst,
                   render_variable(filtration.map_codomain(arrow), filtration.distortion(id))});
    }
    return table.str();
}

ReportJson distortion_table_json(const Filtration& filtration,
                                 const std::vector<std::string>& arrow_ids) {
    ReportJson out = ReportJson::array();
    for (const auto& id : arrow_ids) {
        const Arrow& arrow = filtration.category().arrow(id);
        out.push_back(ReportJson{
            {"arrow", id},
            {"src", arrow.src},
            {"dst", arrow.dst},
            {"dF", variable_json(filtration.map_codomain(arrow), filtration.distortion(id))}});
    }
    return out;
}

std::string holonomy_text(const Filtration& filtration, const Loop& loop,
                          const HolonomyTrace& trace) {
    std::ostringstream out;
    out << "loop: " << join(loop.path.arrows) << " (base " << loop.base() << ")\n";
    out << "Hol:  " << render_variable(filtration.space_of(loop.base()), trace.hol) << "\n";
    out << "trace:\n";
    for (std::size_t k = 1; k <= trace.h.size(); ++k) {
        const FinProbSpace& space = leg_space(filtration, loop, k);
        out << "  h_" << k << " [" << space.id << "] " << render_variable(space, trace.h[k - 1])
            << "\n";
    }
    return out.str();
}

ReportJson holonomy_json(const Filtration& filtration, const Loop& loop,
                         const HolonomyTrace& trace) {
    ReportJson h = ReportJson::array();
    for (std::size_t k = 1; k <= trace.h.size(); ++k) {
        const FinProbSpace& space = leg_space(filtration, loop, k);
        h.push_back(ReportJson{{"k", k},
                               {"space", space.id},
                               {"values", variable_json(space, trace.h[k - 1])}});
    }
    return ReportJson{{"loop", loop.path.arrows},
                      {"base", loop.base()},
                      {"hol", variable_json(filtration.space_of(loop.base()), trace.hol)},
                      {"trace", std::move(h)}};
}

namespace {

ReportJson holonomy_report_json(const Filtration& filtration, const HolonomyReport& report) {
    const FinProbSpace& base = filtration.space_of(report.loop.base());
    return ReportJson{{"loop", report.loop.path.arrows},
                      {"base", report.loop.base()},
                      {"hol", variable_json(base, report.hol)},
                      {"p_neq_1", to_string(report.p_neq_1)},
                      {"p_gt_1", to_string(report.p_gt_1)},
                      {"p_ge_1", to_string(report.p_ge_1)},
                      {"p_dev_eps", to_string(report.p_dev_eps)},
                      {"epsilon", to_string(report.epsilon)},
                      {"classification", to_string(report.classification)}};
}

} // namespace

std::string scan_text(const Filtration& filtration, const std::string& base, std::size_t max_len,
                      const ScanResult& result) {
    std::ostringstream out;
    out << "base: " << base << "  max_len: " << max_len << "  loops: " << result.reports.size()
        << "\n";
    Table table({"loop", "class", "p(!=1)", "p(>1)", "p(>=1)", "p(|dev|>eps)", "Hol"});
    for (const auto& report : result.reports) {
        const FinProbSpace& space = filtration.space_of(report.loop.base());
        table.row({join(report.loop.path.arrows), to_string(report.classification),
                   to_string(report.p_neq_1), to_string(report.p_gt_1), to_string(report.p_ge_1),
                   to_string(report.p_dev_eps), render_variable(space, report.hol)});
    }
    out << table.str();
    out << "verdict: " << to_string(result.verdict);
    if (result.reports.empty()) out << " (no loop found up to length " << max_len << ")";
    out << "\n";
    return out.str();
}

ReportJson scan_json(const Filtration& filtration, const std::string& base, std::size_t max_len,
                     const ScanResult& result) {
    ReportJson reports = ReportJson::array();
    for (const auto& report : result.reports)
        reports.push_back(holonomy_report_json(filtration, report));
    return ReportJson{{"base", base},
                      {"max_len", max_len},
                      {"reports", std::move(reports)},
                      {"verdict", to_string(result.verdict)}};
}

std::string martingale_report_text(const Filtration& filtration, const MartingaleReport& report) {
    Table table({"arrow", "(E.F)(i)(f_t)", "f_s * dF(i)", "ok"});
    for (const auto& check : report.arrows) {
        const Arrow& arrow = filtration.category().arrow(check.arrow_id);
        const FinProbSpace& space = filtration.map_codomain(arrow);
        table.row({check.arrow_id, render_variable(space, check.lhs),
                   render_variable(space, check.rhs), check.ok ? "ok" : "FAIL"});
    }
    return table.str() +
           "verdict: " + (report.ok ? "F-martingale" : "not an F-martingale") + "\n";
}

ReportJson martingale_report_json(const Filtration& filtration, const MartingaleReport& report) {
    ReportJson arrows = ReportJson::array();
    for (const auto& check : report.arrows) {
        const Arrow& arrow = filtration.category().arrow(check.arrow_id);
        const FinProbSpace& space = filtration.map_codomain(arrow);
        arrows.push_back(ReportJson{{"arrow", check.arrow_id},
                                    {"lhs", variable_json(space, check.lhs)},
                                    {"rhs", variable_json(space, check.rhs)},
                                    {"ok", check.ok}});
    }
    return ReportJson{{"arrows", std::move(arrows)}, {"ok", report.ok}};
}

std::string strategy_run_text(const Filtration& filtration, const StrategyRun& run) {
    const FinProbSpace& base = filtration.space_of(run.loop.base());
    std::ostringstream out;
    out << "loop: " << run.loop_label << " = " << join(run.loop.path.arrows) << " (base "
        << run.loop.base() << ")  mode: " << run.mode << "  epsilon: " << to_string(run.epsilon)
        << "\n";
    out << "Hol:      " << render_variable(base, run.holonomy.hol)
        << "   p(Hol>1) = " << to_string(run.holonomy.p_gt_1)
        << "   class = " << to_string(run.holonomy.classification) << "\n";
    out << "position: " << render_variable(base, run.position.values) << "\n";
    out << "wealth V: " << render_variable(base, run.report.wealth) << "\n";
    out << "E[V] = " << to_string(run.report.expected_wealth)
        << "   p(V>1) = " << to_string(run.report.p_strict_gain)
        << "   min V = " << to_string(run.report.min_wealth) << "\n";
    if (!run.wealth_trace.empty()) {
        out << "self-financing trace:\n";
        for (std::size_t k = 0; k < run.wealth_trace.size(); ++k)
            out << "  V_" << k << " = " << render_variable(base, run.wealth_trace[k]) << "\n";
    }
    out << "flagged (no reverse execution): ";
    if (run.report.flagged_points.empty()) {
        out << "none\n";
    } else {
        std::vector<std::string> labels;
        for (std::size_t idx : run.report.flagged_points) labels.push_back(base.points[idx]);
        out << join(labels, ", ") << "\n";
    }
    if (run.admissibility) {
        out << "admissible: " << (run.report.admissible ? "yes" : "no");
        out << "   admissible AB arbitrage: "
            << (run.report.admissible_ab_arbitrage ? "yes" : "no") << "\n";
        for (const auto& failure : run.admissibility->failures) out << "  - " << failure << "\n";
    } else {
        out << "admissible: not declared in spec\n";
    }
    return out.str();
}

ReportJson strategy_run_json(const Filtration& filtration, const StrategyRun& run) {
    const FinProbSpace& base = filtration.space_of(run.loop.base());
    ReportJson out{{"loop", run.loop.path.arrows},
                   {"loop_label", run.loop_label},
                   {"base", run.loop.base()},
                   {"mode", run.mode},
                   {"epsilon", to_string(run.epsilon)},
                   {"holonomy", holonomy_report_json(filtration, run.holonomy)},
                   {"position", variable_json(base, run.position.values)},
                   {"wealth", variable_json(base, run.report.wealth)},
                   {"expected_wealth", to_string(run.report.expected_wealth)},
                   {"p_strict_gain", to_string(run.report.p_strict_gain)},
                   {"min_wealth", to_string(run.report.min_wealth)}};
    ReportJson trace = ReportJson::array();
    for (const auto& v : run.wealth_trace) trace.push_back(variable_json(base, v));
    out["wealth_trace"] = std::move(trace);
    ReportJson flagged = ReportJson::array();
    for (std::size_t idx : run.report.flagged_points) flagged.push_back(base.points[idx]);
    out["flagged_points"] = std::move(flagged);
    if (run.admissibility) {
        out["admissible"] = run.report.admissible;
        out["admissible_ab_arbitrage"] = run.report.admissible_ab_arbitrage;
        out["admissibility_failures"] = run.admissibility->failures;
    } else {
        out["admissible"] = nullptr;
    }
    return out;
}

} // namespace holarb
