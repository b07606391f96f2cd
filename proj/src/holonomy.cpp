#include "holarb/holonomy.hpp"

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "holarb/errors.hpp"

namespace holarb {

std::string to_string(LoopClass cls) {
    switch (cls) {
        case LoopClass::trivial: return "trivial";
        case LoopClass::weak_only: return "weak";
        case LoopClass::strong: return "strong";
    }
    return "?";
}

namespace {

// per-arrow distortions resolved up front; lets scan workers run without
// touching the filtration's memo lock
using DistortionTable = std::map<std::string, RandomVariable>;

HolonomyTrace holonomy_impl(const Filtration& filtration, const Loop& loop,
                            const DistortionTable* table) {
    auto distortion_of = [&](const std::string& id) -> const RandomVariable& {
        return table ? table->at(id) : filtration.distortion_ref(id);
    };
    const auto& arrows = loop.path.arrows;
    const std::size_t n = arrows.size();
    std::vector<RandomVariable> h(n);
    h[n - 1] = distortion_of(arrows[n - 1]);
    for (std::size_t k = n - 1; k-- > 0;) {
        RandomVariable transported = filtration.transport(arrows[k], h[k + 1]);
        const RandomVariable& dF = distortion_of(arrows[k]);
        std::vector<Rat> values(dF.values.size(), Rat(0));
        for (std::size_t x = 0; x < values.size(); ++x)
            values[x] = dF.values[x] * transported.values[x];
        h[k] = RandomVariable{dF.space_id, std::move(values)};
    }
    return HolonomyTrace{h.front(), std::move(h)};
}

Rat event_mass(const FinProbSpace& space, const RandomVariable& hol, auto&& predicate) {
    Rat mass = 0;
    for (std::size_t x = 0; x < space.size(); ++x)
        if (predicate(hol.values[x])) mass += space.weights[x];
    return mass;
}

} // namespace

HolonomyTrace holonomy(const Filtration& filtration, const Loop& loop) {
    return holonomy_impl(filtration, loop, nullptr);
}

namespace {

HolonomyReport classify_impl(const Filtration& filtration, const Loop& loop, const Rat& epsilon,
                             const DistortionTable* table) {
    HolonomyReport report;
    report.loop = loop;
    report.hol = holonomy_impl(filtration, loop, table).hol;
    report.epsilon = epsilon;
    const FinProbSpace& base = filtration.space_of(loop.base());
    report.p_neq_1 = event_mass(base, report.hol, [](const Rat& v) { return v != 1; });
    report.p_gt_1 = event_mass(base, report.hol, [](const Rat& v) { return v > 1; });
    report.p_ge_1 = event_mass(base, report.hol, [](const Rat& v) { return v >= 1; });
    report.p_dev_eps = event_mass(base, report.hol, [&](const Rat& v) {
        Rat dev = v - 1;
        if (dev < 0) dev = -dev;
        return dev > epsilon;
    });
    if (report.p_gt_1 > 0)
        report.classification = LoopClass::strong;
    else if (report.p_neq_1 > 0)
        report.classification = LoopClass::weak_only;
    else
        report.classification = LoopClass::trivial;
    return report;
}

} // namespace

HolonomyReport classify_loop(const Filtration& filtration, const Loop& loop, const Rat& epsilon) {
    if (epsilon < 0) throw ValidationError("epsilon must be >= 0");
    return classify_impl(filtration, loop, epsilon, nullptr);
}

ScanResult scan(const Filtration& filtration, const std::string& base, std::size_t max_len,
                const Rat& epsilon, const ScanOptions& options) {
    if (epsilon < 0) throw ValidationError("epsilon must be >= 0");
    std::vector<Loop> loops = enumerate_based_loops(filtration.category(), base, max_len,
                                                    options.allow_repeat_arrows, options.max_loops);
    ScanResult result;
    result.reports.resize(loops.size());

    DistortionTable table;
    for (const auto& arrow : filtration.category().arrows)
        table.emplace(arrow.id, filtration.distortion(arrow.id));

#ifdef _OPENMP
    if (options.parallel && loops.size() > 1) {
        std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 16)
        for (std::size_t i = 0; i < loops.size(); ++i) {
            try {
                result.reports[i] = classify_impl(filtration, loops[i], epsilon, &table);
            } catch (...) {
#pragma omp critical
                if (!failure) failure = std::current_exception();
            }
        }
        if (failure) std::rethrow_exception(failure);
    } else
#endif
    {
        for (std::size_t i = 0; i < loops.size(); ++i)
            result.reports[i] = classify_impl(filtration, loops[i], epsilon, &table);
    }

    for (const auto& report : result.reports)
        if (static_cast<int>(report.classification) > static_cast<int>(result.verdict))
            result.verdict = report.classification;
    return result;
}

ScanResult scan_serial(const Filtration& filtration, const std::string& base, std::size_t max_len,
                       const Rat& epsilon, ScanOptions options) {
    options.parallel = false;
    return scan(filtration, base, max_len, epsilon, options);
}

ReverseGain reverse_gain(const RandomVariable& hol) {
    ReverseGain gain;
    gain.values.space_id = hol.space_id;
    gain.values.values.resize(hol.values.size(), Rat(0));
    for (std::size_t x = 0; x < hol.values.size(); ++x) {
        if (hol.values[x] > 0) {
            gain.values.values[x] = 1 / hol.values[x];
        } else {
            gain.flagged.push_back(x);
        }
    }
    return gain;
}

} // namespace holarb
