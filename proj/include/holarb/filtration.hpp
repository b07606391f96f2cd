#ifndef HOLARB_FILTRATION_HPP
#define HOLARB_FILTRATION_HPP

#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <vector>

#include "holarb/category.hpp"
#include "holarb/measure.hpp"

namespace holarb {

/// A filtered market system: a contravariant assignment of finite
/// probability spaces to time objects and backward measurable maps to
/// arrows. For an arrow i: s -> t, map_of(i) goes F(t) -> F(s); its
/// conditional expectation operator transports L1(F(t)) into L1(F(s)).
///
/// Immutable after construction. Distortions are memoized per arrow behind
/// a mutex, so a Filtration may be shared across threads.
class Filtration {
public:
    Filtration(TimeCategory category, std::map<std::string, FinProbSpace> space_by_object,
               std::map<std::string, BackwardMap> map_by_arrow);

    const TimeCategory& category() const { return category_; }
    const FinProbSpace& space_of(const std::string& object) const;
    const BackwardMap& map_of(const std::string& arrow_id) const;

    /// Domain space of the arrow's backward map, i.e. space_of(dst).
    const FinProbSpace& map_domain(const Arrow& arrow) const { return space_of(arrow.dst); }
    /// Codomain space of the arrow's backward map, i.e. space_of(src).
    const FinProbSpace& map_codomain(const Arrow& arrow) const { return space_of(arrow.src); }

    /// Applies (E.F)(i) to f in L1(F(t)), landing in L1(F(s)).
    RandomVariable transport(const std::string& arrow_id, const RandomVariable& f) const;

    /// The distortion dF(i) = (E.F)(i)(1). Computed by both available
    /// routes (operator applied to the constant 1, and the Radon-Nikodym
    /// derivative of the pushforward measure) which must agree exactly;
    /// the result is cached per arrow.
    RandomVariable distortion(const std::string& arrow_id) const;

    /// Same value without the copy; the reference stays valid for the
    /// lifetime of the filtration (entries are write-once).
    const RandomVariable& distortion_ref(const std::string& arrow_id) const;

private:
    TimeCategory category_;
    std::map<std::string, FinProbSpace> space_by_object_;
    std::map<std::string, BackwardMap> map_by_arrow_;

    struct DistortionCache {
        std::shared_mutex mu;
        std::map<std::string, RandomVariable> values;
    };
    std::unique_ptr<DistortionCache> cache_;
};

struct ArrowCheck {
    std::string arrow_id;
    bool shape_ok = false;
    bool null_preserving = false;
    std::string message; // empty when both checks pass
};

struct FiltrationReport {
    std::vector<ArrowCheck> arrows;
    bool ok = false;
};

/// Per-arrow shape and null-preservation checks; never throws, failures are
/// carried in the report.
FiltrationReport validate_filtration(const Filtration& filtration);

/// Composite backward map of a path (the measurable map F(t_n) -> F(t_0)).
BackwardMap composite_backward_map(const Filtration& filtration, const Path& path);

/// dF of the composite arrow of a path, computed by transporting the last
/// distortion back along the earlier legs: d <- dF(i_n), then
/// d <- (E.F)(i_k)(d) for k = n-1 .. 1. No intermediate distortion factors
/// are multiplied in; that accumulation is holonomy's job.
RandomVariable distortion_of_path(const Filtration& filtration, const Path& path);

struct CocycleReport {
    std::string first_arrow;  // i: s -> t
    std::string second_arrow; // j: t -> u
    RandomVariable composite;   // dF(j.i) from the composed measurable map
    RandomVariable transported; // (E.F)(i)(dF(j))
    RandomVariable residual;    // composite - transported, pointwise
    bool ok = false;            // residual vanishes a.e.
};

/// Checks the multiplicative cocycle law dF(j.i) = (E.F)(i)(dF(j)) for a
/// composable pair, computing the left side from the composite measurable
/// map directly so the two routes are independent.
CocycleReport check_cocycle(const Filtration& filtration, const std::string& first_arrow,
                            const std::string& second_arrow);

/// One random variable per object of the time category.
using MartingaleFamily = std::map<std::string, RandomVariable>;

struct MartingaleArrowCheck {
    std::string arrow_id;
    RandomVariable lhs; // (E.F)(i)(f_t)
    RandomVariable rhs; // f_s * dF(i)
    bool ok = false;
};

struct MartingaleReport {
    std::vector<MartingaleArrowCheck> arrows;
    bool ok = false;
};

/// F-martingale test: for every arrow i: s -> t, (E.F)(i)(f_t) = f_s * dF(i)
/// a.e. in L1(F(s)). Both sides use the arrow typing of the distortion
/// definition, under which the identity type-checks and reduces to the
/// classical martingale condition when all maps are measure-preserving.
MartingaleReport is_F_martingale(const Filtration& filtration, const MartingaleFamily& family);

} // namespace holarb

#endif // HOLARB_FILTRATION_HPP
