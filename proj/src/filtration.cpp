#include "holarb/filtration.hpp"

#include <mutex>
#include <stdexcept>

#include "holarb/errors.hpp"

namespace holarb {

Filtration::Filtration(TimeCategory category, std::map<std::string, FinProbSpace> space_by_object,
                       std::map<std::string, BackwardMap> map_by_arrow)
    : category_(std::move(category)),
      space_by_object_(std::move(space_by_object)),
      map_by_arrow_(std::move(map_by_arrow)),
      cache_(std::make_unique<DistortionCache>()) {
    for (const auto& object : category_.objects)
        if (!space_by_object_.count(object))
            throw ValidationError("object '" + object + "' has no probability space");
    for (const auto& arrow : category_.arrows) {
        auto it = map_by_arrow_.find(arrow.id);
        if (it == map_by_arrow_.end())
            throw ValidationError("arrow '" + arrow.id + "' has no backward map");
        // structural sanity only; shape and null-preservation are reported
        // by validate_filtration rather than rejected here
        const BackwardMap& map = it->second;
        for (std::size_t idx : map.mapping)
            if (idx >= map_codomain(arrow).size())
                throw ValidationError("arrow '" + arrow.id + "': mapping index " +
                                      std::to_string(idx) + " out of range for space '" +
                                      map_codomain(arrow).id + "'");
        if (map.mapping.size() != map_domain(arrow).size())
            throw ValidationError("arrow '" + arrow.id + "': mapping covers " +
                                  std::to_string(map.mapping.size()) + " points, space '" +
                                  map_domain(arrow).id + "' has " +
                                  std::to_string(map_domain(arrow).size()));
    }
}

const FinProbSpace& Filtration::space_of(const std::string& object) const {
    auto it = space_by_object_.find(object);
    if (it == space_by_object_.end()) throw UnknownObjectError("unknown object '" + object + "'");
    return it->second;
}

const BackwardMap& Filtration::map_of(const std::string& arrow_id) const {
    auto it = map_by_arrow_.find(arrow_id);
    if (it == map_by_arrow_.end()) throw UnknownArrowError("unknown arrow '" + arrow_id + "'");
    return it->second;
}

RandomVariable Filtration::transport(const std::string& arrow_id, const RandomVariable& f) const {
    const Arrow& arrow = category_.arrow(arrow_id);
    return cond_exp(map_of(arrow_id), map_domain(arrow), map_codomain(arrow), f);
}

RandomVariable Filtration::distortion(const std::string& arrow_id) const {
    return distortion_ref(arrow_id);
}

const RandomVariable& Filtration::distortion_ref(const std::string& arrow_id) const {
    {
        std::shared_lock lock(cache_->mu);
        auto it = cache_->values.find(arrow_id);
        if (it != cache_->values.end()) return it->second;
    }
    const Arrow& arrow = category_.arrow(arrow_id);
    const FinProbSpace& domain = map_domain(arrow);
    const FinProbSpace& codomain = map_codomain(arrow);
    const BackwardMap& map = map_of(arrow_id);

    RandomVariable via_operator = cond_exp(map, domain, codomain, constant_variable(domain, 1));
    RandomVariable via_density = radon_nikodym(pushforward(map, domain, codomain), codomain);
    if (!strict_equal(via_operator, via_density))
        throw std::logic_error("distortion routes disagree on arrow '" + arrow_id + "'");

    // emplace is a no-op if another thread inserted first; map nodes are
    // stable so the returned reference outlives the lock
    std::unique_lock lock(cache_->mu);
    return cache_->values.emplace(arrow_id, std::move(via_operator)).first->second;
}

FiltrationReport validate_filtration(const Filtration& filtration) {
    FiltrationReport report;
    report.ok = true;
    for (const auto& arrow : filtration.category().arrows) {
        ArrowCheck check;
        check.arrow_id = arrow.id;
        const BackwardMap& map = filtration.map_of(arrow.id);
        const FinProbSpace& domain = filtration.map_domain(arrow);
        const FinProbSpace& codomain = filtration.map_codomain(arrow);
        check.shape_ok = map.domain_space == domain.id && map.codomain_space == codomain.id &&
                         map.mapping.size() == domain.size();
        if (!check.shape_ok) {
            check.message = "backward map typed " + map.domain_space + " -> " +
                            map.codomain_space + ", expected " + domain.id + " -> " + codomain.id;
        } else {
            check.null_preserving = is_null_preserving(map, domain, codomain);
            if (!check.null_preserving)
                check.message = "positive mass sent onto a null point of '" + codomain.id + "'";
        }
        report.ok = report.ok && check.shape_ok && check.null_preserving;
        report.arrows.push_back(std::move(check));
    }
    return report;
}

BackwardMap composite_backward_map(const Filtration& filtration, const Path& path) {
    // F(i_n . ... . i_1) = F(i_1) . ... . F(i_n): start from the last leg's
    // map and post-compose the earlier ones
    BackwardMap composite = filtration.map_of(path.arrows.back());
    for (std::size_t k = path.arrows.size() - 1; k-- > 0;)
        composite = compose_maps(filtration.map_of(path.arrows[k]), composite);
    return composite;
}

RandomVariable distortion_of_path(const Filtration& filtration, const Path& path) {
    if (path.arrows.empty()) throw NotComposableError("empty path");
    RandomVariable d = filtration.distortion(path.arrows.back());
    for (std::size_t k = path.arrows.size() - 1; k-- > 0;)
        d = filtration.transport(path.arrows[k], d);
    return d;
}

CocycleReport check_cocycle(const Filtration& filtration, const std::string& first_arrow,
                            const std::string& second_arrow) {
    const std::vector<std::string> ids{first_arrow, second_arrow};
    Path path = compose_path(filtration.category(), ids);

    const FinProbSpace& base = filtration.space_of(path.src);       // F(s)
    const FinProbSpace& far = filtration.space_of(path.dst);        // F(u)
    BackwardMap composite_map = composite_backward_map(filtration, path);

    CocycleReport report;
    report.first_arrow = first_arrow;
    report.second_arrow = second_arrow;
    report.composite = radon_nikodym(pushforward(composite_map, far, base), base);
    report.transported = filtration.transport(first_arrow, filtration.distortion(second_arrow));

    std::vector<Rat> diff(base.size(), Rat(0));
    for (std::size_t x = 0; x < base.size(); ++x)
        diff[x] = report.composite.values[x] - report.transported.values[x];
    report.residual = RandomVariable{base.id, std::move(diff)};
    report.ok = ae_equal(base, report.composite, report.transported);
    return report;
}

MartingaleReport is_F_martingale(const Filtration& filtration, const MartingaleFamily& family) {
    for (const auto& object : filtration.category().objects) {
        auto it = family.find(object);
        if (it == family.end())
            throw ValidationError("martingale family has no entry for object '" + object + "'");
        const FinProbSpace& space = filtration.space_of(object);
        if (it->second.space_id != space.id || it->second.values.size() != space.size())
            throw SpaceMismatchError("family member for object '" + object + "' is carried by '" +
                                     it->second.space_id + "', expected space '" + space.id + "'");
    }
    MartingaleReport report;
    report.ok = true;
    for (const auto& arrow : filtration.category().arrows) {
        MartingaleArrowCheck check;
        check.arrow_id = arrow.id;
        const FinProbSpace& here = filtration.map_codomain(arrow); // F(s) for i: s -> t
        check.lhs = filtration.transport(arrow.id, family.at(arrow.dst));
        RandomVariable dF = filtration.distortion(arrow.id);
        const RandomVariable& f_s = family.at(arrow.src);
        std::vector<Rat> rhs(here.size(), Rat(0));
        for (std::size_t x = 0; x < here.size(); ++x) rhs[x] = f_s.values[x] * dF.values[x];
        check.rhs = RandomVariable{here.id, std::move(rhs)};
        check.ok = ae_equal(here, check.lhs, check.rhs);
        report.ok = report.ok && check.ok;
        report.arrows.push_back(std::move(check));
    }
    return report;
}

} // namespace holarb
