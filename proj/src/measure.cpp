#include "holarb/measure.hpp"

#include <algorithm>
#include <unordered_set>

#include "holarb/errors.hpp"

namespace holarb {

std::optional<std::size_t> FinProbSpace::index_of(std::string_view point) const {
    for (std::size_t i = 0; i < points.size(); ++i)
        if (points[i] == point) return i;
    return std::nullopt;
}

FinProbSpace make_space(std::string id, std::vector<std::string> points, std::vector<Rat> weights) {
    if (points.empty())
        throw ValidationError("space '" + id + "': point set must be nonempty");
    if (points.size() != weights.size())
        throw ValidationError("space '" + id + "': " + std::to_string(points.size()) +
                              " points but " + std::to_string(weights.size()) + " weights");
    std::unordered_set<std::string> seen;
    for (const auto& p : points)
        if (!seen.insert(p).second)
            throw DuplicatePointError("space '" + id + "': duplicate point label '" + p + "'");
    Rat total = 0;
    for (const auto& w : weights) {
        if (w < 0)
            throw ValidationError("space '" + id + "': negative weight " + to_string(w));
        total += w;
    }
    if (total != 1)
        throw WeightSumError("space '" + id + "': weights sum to " + to_string(total) +
                             ", expected 1");
    return FinProbSpace{std::move(id), std::move(points), std::move(weights)};
}

RandomVariable constant_variable(const FinProbSpace& space, const Rat& value) {
    return RandomVariable{space.id, std::vector<Rat>(space.size(), value)};
}

namespace {

void require_carrier(const FinProbSpace& space, const RandomVariable& f, const char* what) {
    if (f.space_id != space.id)
        throw SpaceMismatchError(std::string(what) + ": variable carried by '" + f.space_id +
                                 "', expected space '" + space.id + "'");
    if (f.values.size() != space.size())
        throw SpaceMismatchError(std::string(what) + ": variable has " +
                                 std::to_string(f.values.size()) + " values, space '" + space.id +
                                 "' has " + std::to_string(space.size()) + " points");
}

void require_map_shape(const BackwardMap& map, const FinProbSpace& domain,
                       const FinProbSpace& codomain, const char* what) {
    if (map.domain_space != domain.id)
        throw SpaceMismatchError(std::string(what) + ": map domain is '" + map.domain_space +
                                 "', got space '" + domain.id + "'");
    if (map.codomain_space != codomain.id)
        throw SpaceMismatchError(std::string(what) + ": map codomain is '" + map.codomain_space +
                                 "', got space '" + codomain.id + "'");
    if (map.mapping.size() != domain.size())
        throw SpaceMismatchError(std::string(what) + ": mapping covers " +
                                 std::to_string(map.mapping.size()) + " points, domain '" +
                                 domain.id + "' has " + std::to_string(domain.size()));
    for (std::size_t x = 0; x < map.mapping.size(); ++x)
        if (map.mapping[x] >= codomain.size())
            throw SpaceMismatchError(std::string(what) + ": point " + domain.points[x] +
                                     " maps to index " + std::to_string(map.mapping[x]) +
                                     " outside codomain '" + codomain.id + "'");
}

} // namespace

bool is_null_preserving(const BackwardMap& map, const FinProbSpace& domain,
                        const FinProbSpace& codomain) {
    require_map_shape(map, domain, codomain, "is_null_preserving");
    std::vector<Rat> fiber_mass(codomain.size(), Rat(0));
    for (std::size_t x = 0; x < domain.size(); ++x)
        fiber_mass[map.mapping[x]] += domain.weights[x];
    for (std::size_t y = 0; y < codomain.size(); ++y)
        if (codomain.weights[y] == 0 && fiber_mass[y] != 0) return false;
    return true;
}

std::vector<Rat> pushforward(const BackwardMap& map, const FinProbSpace& source,
                             const FinProbSpace& codomain) {
    require_map_shape(map, source, codomain, "pushforward");
    std::vector<Rat> measure(codomain.size(), Rat(0));
    for (std::size_t x = 0; x < source.size(); ++x)
        measure[map.mapping[x]] += source.weights[x];
    return measure;
}

RandomVariable radon_nikodym(const std::vector<Rat>& numerator, const FinProbSpace& base) {
    if (numerator.size() != base.size())
        throw SpaceMismatchError("radon_nikodym: numerator has " +
                                 std::to_string(numerator.size()) + " entries, space '" + base.id +
                                 "' has " + std::to_string(base.size()) + " points");
    std::vector<Rat> values(base.size(), Rat(0));
    for (std::size_t y = 0; y < base.size(); ++y) {
        if (base.weights[y] != 0) {
            values[y] = numerator[y] / base.weights[y];
        } else if (numerator[y] != 0) {
            throw AbsoluteContinuityError("radon_nikodym: numerator mass " +
                                          to_string(numerator[y]) + " on null point '" +
                                          base.points[y] + "' of space '" + base.id + "'");
        }
        // null point with zero numerator: keep the canonical representative 0
    }
    return RandomVariable{base.id, std::move(values)};
}

RandomVariable cond_exp(const BackwardMap& map, const FinProbSpace& domain,
                        const FinProbSpace& codomain, const RandomVariable& f) {
    require_map_shape(map, domain, codomain, "cond_exp");
    require_carrier(domain, f, "cond_exp");
    if (!is_null_preserving(map, domain, codomain))
        throw NullPreservationError("cond_exp: map " + domain.id + " -> " + codomain.id +
                                    " is not null-preserving");
    std::vector<Rat> fiber_sum(codomain.size(), Rat(0)); // sum of f * mu over each fiber
    for (std::size_t x = 0; x < domain.size(); ++x)
        fiber_sum[map.mapping[x]] += f.values[x] * domain.weights[x];
    std::vector<Rat> values(codomain.size(), Rat(0));
    for (std::size_t y = 0; y < codomain.size(); ++y)
        if (codomain.weights[y] != 0) values[y] = fiber_sum[y] / codomain.weights[y];
    return RandomVariable{codomain.id, std::move(values)};
}

std::vector<Rat> CondExpOperator::apply(const std::vector<Rat>& values) const {
    std::vector<Rat> result(matrix.size(), Rat(0));
    for (std::size_t y = 0; y < matrix.size(); ++y) {
        if (matrix[y].size() != values.size())
            throw SpaceMismatchError("CondExpOperator::apply: vector length " +
                                     std::to_string(values.size()) + " does not match matrix row " +
                                     std::to_string(matrix[y].size()));
        Rat acc = 0;
        for (std::size_t x = 0; x < values.size(); ++x) acc += matrix[y][x] * values[x];
        result[y] = acc;
    }
    return result;
}

CondExpOperator cond_exp_operator(const BackwardMap& map, const FinProbSpace& domain,
                                  const FinProbSpace& codomain) {
    require_map_shape(map, domain, codomain, "cond_exp_operator");
    if (!is_null_preserving(map, domain, codomain))
        throw NullPreservationError("cond_exp_operator: map " + domain.id + " -> " + codomain.id +
                                    " is not null-preserving");
    std::vector<std::vector<Rat>> matrix(codomain.size(), std::vector<Rat>(domain.size(), Rat(0)));
    for (std::size_t x = 0; x < domain.size(); ++x) {
        const std::size_t y = map.mapping[x];
        if (codomain.weights[y] != 0) matrix[y][x] = domain.weights[x] / codomain.weights[y];
    }
    return CondExpOperator{domain.id, codomain.id, std::move(matrix)};
}

CondExpOperator compose(const CondExpOperator& outer, const CondExpOperator& inner) {
    if (inner.target_space != outer.source_space)
        throw SpaceMismatchError("compose: inner target '" + inner.target_space +
                                 "' does not match outer source '" + outer.source_space + "'");
    const std::size_t rows = outer.matrix.size();
    const std::size_t mid = inner.matrix.size();
    const std::size_t cols = mid == 0 ? 0 : inner.matrix.front().size();
    std::vector<std::vector<Rat>> matrix(rows, std::vector<Rat>(cols, Rat(0)));
    for (std::size_t z = 0; z < rows; ++z)
        for (std::size_t y = 0; y < mid; ++y) {
            if (outer.matrix[z][y] == 0) continue;
            for (std::size_t x = 0; x < cols; ++x)
                matrix[z][x] += outer.matrix[z][y] * inner.matrix[y][x];
        }
    return CondExpOperator{inner.source_space, outer.target_space, std::move(matrix)};
}

BackwardMap compose_maps(const BackwardMap& outer, const BackwardMap& inner) {
    if (inner.codomain_space != outer.domain_space)
        throw SpaceMismatchError("compose_maps: inner codomain '" + inner.codomain_space +
                                 "' does not match outer domain '" + outer.domain_space + "'");
    std::vector<std::size_t> mapping(inner.mapping.size());
    for (std::size_t x = 0; x < inner.mapping.size(); ++x) {
        if (inner.mapping[x] >= outer.mapping.size())
            throw SpaceMismatchError("compose_maps: intermediate index out of range");
        mapping[x] = outer.mapping[inner.mapping[x]];
    }
    return BackwardMap{inner.domain_space, outer.codomain_space, std::move(mapping)};
}

Rat integrate(const FinProbSpace& space, const RandomVariable& f) {
    require_carrier(space, f, "integrate");
    Rat total = 0;
    for (std::size_t x = 0; x < space.size(); ++x) total += f.values[x] * space.weights[x];
    return total;
}

bool ae_equal(const FinProbSpace& space, const RandomVariable& a, const RandomVariable& b) {
    require_carrier(space, a, "ae_equal");
    require_carrier(space, b, "ae_equal");
    for (std::size_t x = 0; x < space.size(); ++x)
        if (space.weights[x] != 0 && a.values[x] != b.values[x]) return false;
    return true;
}

bool strict_equal(const RandomVariable& a, const RandomVariable& b) {
    return a.space_id == b.space_id && a.values == b.values;
}

} // namespace holarb
