#ifndef HOLARB_MEASURE_HPP
#define HOLARB_MEASURE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "holarb/rational.hpp"

namespace holarb {

/// A finite probability space: labeled points with exact rational weights
/// summing to 1. The sigma-algebra is always the full power set. Zero
/// weights are allowed (null points).
struct FinProbSpace {
    std::string id;
    std::vector<std::string> points;
    std::vector<Rat> weights;

    std::size_t size() const { return points.size(); }
    std::optional<std::size_t> index_of(std::string_view point) const;

    bool operator==(const FinProbSpace&) const = default;
};

/// An element of L^1 of a finite space: one exact rational per point of the
/// carrying space. Values on null points are representative choices only;
/// use ae_equal for the L^1 notion of equality.
struct RandomVariable {
    std::string space_id;
    std::vector<Rat> values;

    bool operator==(const RandomVariable&) const = default;
};

/// A measurable map between finite spaces, stored backwards-compatible with
/// how filtrations use it: for an arrow s -> t of the time category this is
/// F(t) -> F(s), i.e. domain_space names F(t) and codomain_space names F(s).
/// mapping[x] is the codomain point index the domain point x is sent to.
struct BackwardMap {
    std::string domain_space;
    std::string codomain_space;
    std::vector<std::size_t> mapping;

    bool operator==(const BackwardMap&) const = default;
};

/// The conditional expectation operator of a map phi: X -> Y as a dense
/// |Y| x |X| matrix over the rationals. Row y is mu(x)/nu(y) on the fiber
/// over y and zero elsewhere; rows over null points are identically zero.
struct CondExpOperator {
    std::string source_space; // X, the L^1 domain (= the map's domain)
    std::string target_space; // Y, the L^1 codomain (= the map's codomain)
    std::vector<std::vector<Rat>> matrix;

    std::vector<Rat> apply(const std::vector<Rat>& values) const;

    bool operator==(const CondExpOperator&) const = default;
};

// -- construction and validation -----------------------------------------

/// Validates and returns a finite probability space.
/// Throws WeightSumError if the weights do not sum to exactly 1,
/// DuplicatePointError on repeated labels, ValidationError on negative
/// weights or an empty point set.
FinProbSpace make_space(std::string id, std::vector<std::string> points, std::vector<Rat> weights);

RandomVariable constant_variable(const FinProbSpace& space, const Rat& value);

/// True when the preimage of every null codomain point carries zero domain
/// mass (the finite form of "phi^{-1} preserves null sets").
bool is_null_preserving(const BackwardMap& map, const FinProbSpace& domain,
                        const FinProbSpace& codomain);

// -- operations ------------------------------------------------------------

/// The pushforward measure mu . phi^{-1} on the codomain: entry y is the
/// total source weight of the fiber over y. Entries sum to exactly 1.
std::vector<Rat> pushforward(const BackwardMap& map, const FinProbSpace& source,
                             const FinProbSpace& codomain);

/// d(numerator)/d(base) pointwise; 0 at null base points. Throws
/// AbsoluteContinuityError when a null base point carries numerator mass.
RandomVariable radon_nikodym(const std::vector<Rat>& numerator, const FinProbSpace& base);

/// The conditional expectation E(phi)(f) in L^1 of the codomain, defined
/// by sum_{x -> y} f(x) mu(x) / nu(y) on non-null y and 0 on null y.
RandomVariable cond_exp(const BackwardMap& map, const FinProbSpace& domain,
                        const FinProbSpace& codomain, const RandomVariable& f);

/// Dense matrix form of cond_exp for the same map.
CondExpOperator cond_exp_operator(const BackwardMap& map, const FinProbSpace& domain,
                                  const FinProbSpace& codomain);

/// Operator composition E(outer) . E(inner) as a matrix product.
/// inner: L1(X) -> L1(Y), outer: L1(Y) -> L1(Z).
CondExpOperator compose(const CondExpOperator& outer, const CondExpOperator& inner);

/// Measurable-map composition: inner then outer (outer . inner as functions).
BackwardMap compose_maps(const BackwardMap& outer, const BackwardMap& inner);

/// Integral of f against the space's measure.
Rat integrate(const FinProbSpace& space, const RandomVariable& f);

// -- equality semantics ------------------------------------------------------

/// Almost-everywhere equality: values may differ only on null points.
bool ae_equal(const FinProbSpace& space, const RandomVariable& a, const RandomVariable& b);

/// Strict pointwise equality including the representatives on null points.
bool strict_equal(const RandomVariable& a, const RandomVariable& b);

} // namespace holarb

#endif // HOLARB_MEASURE_HPP
