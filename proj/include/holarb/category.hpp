#ifndef HOLARB_CATEGORY_HPP
#define HOLARB_CATEGORY_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace holarb {

struct Arrow {
    std::string id;
    std::string src;
    std::string dst;

    bool operator==(const Arrow&) const = default;
};

/// The time category, presented as a directed multigraph. Composites are
/// formal paths: the category is free on these generating arrows.
struct TimeCategory {
    std::vector<std::string> objects;
    std::vector<Arrow> arrows;

    bool has_object(std::string_view id) const;
    const Arrow& arrow(std::string_view id) const; // throws UnknownArrowError

    bool operator==(const TimeCategory&) const = default;
};

/// A composable sequence of generating arrows. src/dst are derived at
/// construction and kept alongside the ids.
struct Path {
    std::vector<std::string> arrows;
    std::string src;
    std::string dst;

    std::size_t length() const { return arrows.size(); }

    bool operator==(const Path&) const = default;
};

/// A nonempty path whose endpoints coincide; base() is where holonomy lives.
struct Loop {
    Path path;

    const std::string& base() const { return path.src; }
    std::size_t length() const { return path.length(); }

    bool operator==(const Loop&) const = default;
};

/// A formal reversed leg of a path; reversal is a bookkeeping marker only,
/// no categorical inverse is assumed to exist.
struct ReversedLeg {
    std::string arrow_id;

    bool operator==(const ReversedLeg&) const = default;
};

TimeCategory build_category(std::vector<std::string> objects, std::vector<Arrow> arrows);

Path compose_path(const TimeCategory& category, std::span<const std::string> arrow_ids);

Loop make_loop(const TimeCategory& category, std::span<const std::string> arrow_ids);

/// All loops based at `base` of length <= max_len, in lexicographic order of
/// their arrow-id sequences. Rotations of the same cycle count as distinct
/// loops. Without allow_repeat_arrows each generating arrow appears at most
/// once per loop. max_loops caps the result size (SizeBoundError beyond it).
std::vector<Loop> enumerate_based_loops(const TimeCategory& category, const std::string& base,
                                        std::size_t max_len, bool allow_repeat_arrows = false,
                                        std::optional<std::size_t> max_loops = std::nullopt);

std::vector<ReversedLeg> reverse_path(const Path& path);

} // namespace holarb

#endif // HOLARB_CATEGORY_HPP
