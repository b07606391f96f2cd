#include "holarb/strategy.hpp"

#include <algorithm>

#include "holarb/errors.hpp"

namespace holarb {

Position ab_position(const RandomVariable& hol) {
    std::vector<Rat> values(hol.values.size(), Rat(0));
    for (std::size_t x = 0; x < hol.values.size(); ++x)
        if (hol.values[x] > 1) values[x] = 1;
    return Position{RandomVariable{hol.space_id, std::move(values)}};
}

Position wab_position(const RandomVariable& hol, const Rat& epsilon) {
    if (epsilon < 0) throw ValidationError("epsilon must be >= 0");
    std::vector<Rat> values(hol.values.size(), Rat(0));
    for (std::size_t x = 0; x < hol.values.size(); ++x) {
        if (hol.values[x] > 1 + epsilon)
            values[x] = 1;
        else if (hol.values[x] < 1 - epsilon)
            values[x] = -1;
    }
    return Position{RandomVariable{hol.space_id, std::move(values)}};
}

namespace {

void require_base(const FinProbSpace& base, const RandomVariable& hol) {
    if (hol.space_id != base.id || hol.values.size() != base.size())
        throw SpaceMismatchError("holonomy carried by '" + hol.space_id + "', expected space '" +
                                 base.id + "'");
}

void fill_statistics(StrategyReport& report, const FinProbSpace& base) {
    report.expected_wealth = integrate(base, report.wealth);
    report.p_strict_gain = 0;
    bool have_min = false;
    for (std::size_t x = 0; x < base.size(); ++x) {
        if (report.wealth.values[x] > 1) report.p_strict_gain += base.weights[x];
        if (base.weights[x] == 0) continue;
        if (std::find(report.flagged_points.begin(), report.flagged_points.end(), x) !=
            report.flagged_points.end())
            continue;
        if (!have_min || report.wealth.values[x] < report.min_wealth) {
            report.min_wealth = report.wealth.values[x];
            have_min = true;
        }
    }
    if (!have_min) report.min_wealth = 1; // every positive-weight point flagged
}

} // namespace

StrategyReport ab_wealth(const FinProbSpace& base, const RandomVariable& hol) {
    require_base(base, hol);
    Position theta = ab_position(hol);
    StrategyReport report;
    std::vector<Rat> values(base.size(), Rat(0));
    for (std::size_t x = 0; x < base.size(); ++x)
        values[x] = 1 + theta.values.values[x] * (hol.values[x] - 1);
    report.wealth = RandomVariable{base.id, std::move(values)};
    fill_statistics(report, base);
    return report;
}

StrategyReport wab_wealth(const FinProbSpace& base, const RandomVariable& hol, const Rat& epsilon) {
    require_base(base, hol);
    Position theta = wab_position(hol, epsilon);
    ReverseGain reciprocal = reverse_gain(hol);
    StrategyReport report;
    std::vector<Rat> values(base.size(), Rat(1));
    for (std::size_t x = 0; x < base.size(); ++x) {
        if (theta.values.values[x] == 1) {
            values[x] = hol.values[x];
        } else if (theta.values.values[x] == -1) {
            values[x] = reciprocal.values.values[x];
            if (std::find(reciprocal.flagged.begin(), reciprocal.flagged.end(), x) !=
                reciprocal.flagged.end())
                report.flagged_points.push_back(x);
        }
    }
    report.wealth = RandomVariable{base.id, std::move(values)};
    fill_statistics(report, base);
    return report;
}

void apply_admissibility(StrategyReport& report, bool admissible, const Rat& p_gt_1) {
    report.admissible = admissible;
    report.admissible_ab_arbitrage = admissible && p_gt_1 > 0;
}

AdmissibilityVerdict check_admissibility(const Loop& loop, const AdmissibilityDeclaration& decl,
                                         bool require_reverse) {
    AdmissibilityVerdict verdict;
    bool executable = true;
    for (const auto& arrow_id : loop.path.arrows) {
        auto it = decl.executable.find(arrow_id);
        if (it == decl.executable.end())
            throw IncompleteDeclarationError("no executability declared for arrow '" + arrow_id +
                                             "'");
        if (!it->second) {
            executable = false;
            verdict.failures.push_back("arrow '" + arrow_id + "' is not executable");
        }
    }
    // observability holds by construction (Hol lives on the base space) and
    // composability is guaranteed by the Loop invariant
    if (!decl.self_financing) verdict.failures.push_back("loop is not declared self-financing");
    verdict.admissible = executable && decl.self_financing;
    verdict.wab_admissible = verdict.admissible;
    if (require_reverse) {
        if (!decl.reverse_executable.has_value()) {
            verdict.wab_admissible = false;
            verdict.failures.push_back("reverse executability required but not declared");
        } else if (!*decl.reverse_executable) {
            verdict.wab_admissible = false;
            verdict.failures.push_back("reverse execution declared unavailable");
        }
    }
    return verdict;
}

std::vector<RandomVariable> self_financing_wealth_trace(const Filtration& filtration,
                                                        const Loop& loop) {
    const auto& arrows = loop.path.arrows;
    const FinProbSpace& base = filtration.space_of(loop.base());
    std::vector<RandomVariable> trace;
    trace.reserve(arrows.size() + 1);
    trace.push_back(constant_variable(base, 1));
    for (std::size_t k = 1; k <= arrows.size(); ++k) {
        // transported distortion product of the first k legs
        RandomVariable v = filtration.distortion(arrows[k - 1]);
        for (std::size_t j = k - 1; j-- > 0;) {
            RandomVariable transported = filtration.transport(arrows[j], v);
            RandomVariable dF = filtration.distortion(arrows[j]);
            std::vector<Rat> values(dF.values.size(), Rat(0));
            for (std::size_t x = 0; x < values.size(); ++x)
                values[x] = dF.values[x] * transported.values[x];
            v = RandomVariable{dF.space_id, std::move(values)};
        }
        trace.push_back(std::move(v));
    }
    return trace;
}

} // namespace holarb
