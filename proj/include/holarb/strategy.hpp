#ifndef HOLARB_STRATEGY_HPP
#define HOLARB_STRATEGY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "holarb/filtration.hpp"
#include "holarb/holonomy.hpp"

namespace holarb {

/// A predictable position on the base space with entries in {-1, 0, 1}
/// ({0, 1} for the one-sided AB position). A function of the holonomy
/// alone, so the entire decision uses time-t0 information.
struct Position {
    RandomVariable values;
};

/// theta_AB = 1_{Hol > 1}.
Position ab_position(const RandomVariable& hol);

/// theta_wAB = 1_{Hol > 1+eps} - 1_{Hol < 1-eps}.
Position wab_position(const RandomVariable& hol, const Rat& epsilon);

struct StrategyReport {
    RandomVariable wealth;
    Rat expected_wealth;
    Rat p_strict_gain; // mu(V > 1)
    Rat min_wealth;    // over positive-weight, unflagged points
    std::vector<std::size_t> flagged_points; // reverse leg with Hol = 0
    bool admissible = false;
    bool admissible_ab_arbitrage = false;
};

/// One-unit wealth of the AB strategy: V = 1 + theta_AB * (Hol - 1).
/// V >= 1 everywhere with strict gain exactly on {Hol > 1}.
StrategyReport ab_wealth(const FinProbSpace& base, const RandomVariable& hol);

/// Wealth of the sign strategy: Hol on the long region, the idealized
/// reciprocal on the short region, 1 where flat. Short-region points with
/// Hol = 0 are flagged and excluded from the V >= 1 guarantee.
StrategyReport wab_wealth(const FinProbSpace& base, const RandomVariable& hol, const Rat& epsilon);

/// Fills in the admissibility fields of a report: admissible_ab_arbitrage
/// requires both an admissible loop and mu(Hol > 1) > 0.
void apply_admissibility(StrategyReport& report, bool admissible, const Rat& p_gt_1);

/// Market-microstructure facts the user declares; observability is not
/// declared because Hol(gamma) is carried by the base space by construction.
struct AdmissibilityDeclaration {
    std::map<std::string, bool> executable; // per arrow id
    bool self_financing = false;
    std::optional<bool> reverse_executable;
};

struct AdmissibilityVerdict {
    bool admissible = false;     // enough for the AB strategy
    bool wab_admissible = false; // additionally allows a short region
    std::vector<std::string> failures;
};

/// Evaluates the declaration against a loop. Every arrow of the loop must
/// have an executable entry (IncompleteDeclarationError otherwise). When
/// require_reverse is set (a wAB request with a nonempty short region) the
/// wab verdict additionally demands reverse_executable = true.
AdmissibilityVerdict check_admissibility(const Loop& loop, const AdmissibilityDeclaration& decl,
                                         bool require_reverse = false);

/// Self-financing wealth curve V_0 = 1, ..., V_n along the loop, each leg
/// valued at the base: V_k is the transported distortion product of the
/// first k legs, so the per-leg factors telescope and V_n = Hol(gamma).
std::vector<RandomVariable> self_financing_wealth_trace(const Filtration& filtration,
                                                        const Loop& loop);

} // namespace holarb

#endif // HOLARB_STRATEGY_HPP
