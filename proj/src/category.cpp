#include "holarb/category.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "holarb/errors.hpp"

namespace holarb {

bool TimeCategory::has_object(std::string_view id) const {
    return std::find(objects.begin(), objects.end(), id) != objects.end();
}

const Arrow& TimeCategory::arrow(std::string_view id) const {
    for (const auto& a : arrows)
        if (a.id == id) return a;
    throw UnknownArrowError("unknown arrow '" + std::string(id) + "'");
}

TimeCategory build_category(std::vector<std::string> objects, std::vector<Arrow> arrows) {
    std::unordered_set<std::string> object_set;
    for (const auto& o : objects)
        if (!object_set.insert(o).second)
            throw ValidationError("duplicate object '" + o + "'");
    std::unordered_set<std::string> arrow_ids;
    for (const auto& a : arrows) {
        if (!arrow_ids.insert(a.id).second)
            throw DuplicateArrowError("duplicate arrow id '" + a.id + "'");
        if (!object_set.count(a.src))
            throw DanglingEndpointError("arrow '" + a.id + "': unknown source object '" + a.src +
                                        "'");
        if (!object_set.count(a.dst))
            throw DanglingEndpointError("arrow '" + a.id + "': unknown target object '" + a.dst +
                                        "'");
    }
    return TimeCategory{std::move(objects), std::move(arrows)};
}

Path compose_path(const TimeCategory& category, std::span<const std::string> arrow_ids) {
    if (arrow_ids.empty()) throw NotComposableError("empty arrow sequence");
    const Arrow* first = &category.arrow(arrow_ids.front());
    std::string src = first->src;
    std::string at = first->dst;
    for (std::size_t k = 1; k < arrow_ids.size(); ++k) {
        const Arrow& next = category.arrow(arrow_ids[k]);
        if (next.src != at)
            throw NotComposableError("arrows '" + arrow_ids[k - 1] + "' and '" + arrow_ids[k] +
                                     "' do not chain: '" + at + "' != '" + next.src + "'");
        at = next.dst;
    }
    return Path{std::vector<std::string>(arrow_ids.begin(), arrow_ids.end()), std::move(src),
                std::move(at)};
}

Loop make_loop(const TimeCategory& category, std::span<const std::string> arrow_ids) {
    Path path = compose_path(category, arrow_ids);
    if (path.src != path.dst)
        throw NotComposableError("path from '" + path.src + "' to '" + path.dst +
                                 "' is not a loop");
    return Loop{std::move(path)};
}

std::vector<Loop> enumerate_based_loops(const TimeCategory& category, const std::string& base,
                                        std::size_t max_len, bool allow_repeat_arrows,
                                        std::optional<std::size_t> max_loops) {
    if (max_len < 1) throw ValidationError("max_len must be >= 1");
    if (!category.has_object(base)) throw UnknownObjectError("unknown base object '" + base + "'");

    // outgoing arrows per object, ordered by arrow id so that DFS emits loops
    // in lexicographic order (a loop is recorded before its extensions)
    std::unordered_map<std::string, std::vector<const Arrow*>> out;
    for (const auto& a : category.arrows) out[a.src].push_back(&a);
    for (auto& [obj, list] : out)
        std::sort(list.begin(), list.end(),
                  [](const Arrow* a, const Arrow* b) { return a->id < b->id; });

    std::vector<Loop> loops;
    std::vector<std::string> stack;
    std::unordered_set<std::string> used;

    auto dfs = [&](auto&& self, const std::string& at) -> void {
        auto it = out.find(at);
        if (it == out.end()) return;
        for (const Arrow* a : it->second) {
            if (!allow_repeat_arrows && used.count(a->id)) continue;
            stack.push_back(a->id);
            if (!allow_repeat_arrows) used.insert(a->id);
            if (a->dst == base) {
                if (max_loops && loops.size() >= *max_loops)
                    throw SizeBoundError("loop enumeration exceeded cap of " +
                                         std::to_string(*max_loops));
                loops.push_back(Loop{Path{stack, base, base}});
            }
            if (stack.size() < max_len) self(self, a->dst);
            if (!allow_repeat_arrows) used.erase(a->id);
            stack.pop_back();
        }
    };
    dfs(dfs, base);
    return loops;
}

std::vector<ReversedLeg> reverse_path(const Path& path) {
    std::vector<ReversedLeg> legs;
    legs.reserve(path.arrows.size());
    for (auto it = path.arrows.rbegin(); it != path.arrows.rend(); ++it)
        legs.push_back(ReversedLeg{*it});
    return legs;
}

} // namespace holarb
