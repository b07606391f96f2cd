#ifndef HOLARB_HOLONOMY_HPP
#define HOLARB_HOLONOMY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "holarb/filtration.hpp"

namespace holarb {

enum class LoopClass { trivial, weak_only, strong };

std::string to_string(LoopClass cls);

/// Holonomy of a loop plus the intermediate transports h_1 .. h_n of the
/// backward recursion: h[k-1] is h_k, carried by the space of t_{k-1};
/// h.front() is Hol(gamma) itself.
struct HolonomyTrace {
    RandomVariable hol;
    std::vector<RandomVariable> h;
};

/// Backward recursion along the loop: h_n = dF(i_n), then
/// h_k = dF(i_k) * (E.F)(i_k)(h_{k+1}); Hol = h_1, carried by the base space.
HolonomyTrace holonomy(const Filtration& filtration, const Loop& loop);

struct HolonomyReport {
    Loop loop;
    RandomVariable hol;
    Rat p_neq_1;   // mu_base(Hol != 1)
    Rat p_gt_1;    // mu_base(Hol > 1)
    Rat p_ge_1;    // mu_base(Hol >= 1)
    Rat p_dev_eps; // mu_base(|Hol - 1| > epsilon)
    Rat epsilon;
    LoopClass classification = LoopClass::trivial;
};

/// Classifies a loop: strong iff mu(Hol > 1) > 0, weak_only iff
/// mu(Hol != 1) > 0 with no strict exceedance, trivial otherwise.
HolonomyReport classify_loop(const Filtration& filtration, const Loop& loop, const Rat& epsilon);

struct ScanOptions {
    bool allow_repeat_arrows = false;
    bool parallel = true;                   // fan out per loop with OpenMP
    std::optional<std::size_t> max_loops;   // enumeration safety cap
};

struct ScanResult {
    std::vector<HolonomyReport> reports; // one per enumerated loop, in order
    LoopClass verdict = LoopClass::trivial; // strongest classification found
};

/// Enumerates loops based at `base` up to max_len and classifies each one.
/// A bounded search: a trivial verdict means no non-trivial loop was found
/// within the bound, not that none exists.
ScanResult scan(const Filtration& filtration, const std::string& base, std::size_t max_len,
                const Rat& epsilon, const ScanOptions& options = {});

/// Serial reference for scan; scan with parallel fan-out must produce
/// byte-identical reports in the same order.
ScanResult scan_serial(const Filtration& filtration, const std::string& base, std::size_t max_len,
                       const Rat& epsilon, ScanOptions options = {});

/// Pointwise reciprocal of a holonomy. Points where hol vanishes get value 0
/// and are flagged as non-executable-in-reverse instead of erroring.
struct ReverseGain {
    RandomVariable values;
    std::vector<std::size_t> flagged;
};

ReverseGain reverse_gain(const RandomVariable& hol);

} // namespace holarb

#endif // HOLARB_HOLONOMY_HPP
