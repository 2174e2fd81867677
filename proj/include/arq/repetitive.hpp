#pragma once

#include <compare>
#include <map>
#include <optional>
#include <vector>

#include "arq/quiver.hpp"

namespace arq {

// Vertex (level, base) of the repetitive quiver; ordered by level, then base.
struct ZVertex {
    int level = 0;
    int base = 0;

    auto operator<=>(const ZVertex&) const = default;
};

enum class ZKind { Plain, Star };

struct ZArrow {
    ZVertex src;
    ZVertex dst;
    Valuation val;
    ZKind kind = ZKind::Plain;
    int arrow = 0;  // id of the underlying arrow of the base quiver

    bool operator==(const ZArrow&) const = default;
};

struct ZPath {
    std::vector<ZVertex> vertices;
    std::vector<ZArrow> arrows;

    int length() const { return static_cast<int>(arrows.size()); }
    bool operator==(const ZPath&) const = default;
};

struct Section {
    std::vector<ZVertex> vertices;  // one per base vertex, indexed by base - 1
    std::vector<ZArrow> arrows;

    int level_of(int base) const { return vertices[static_cast<size_t>(base - 1)].level; }
};

using ZFunction = std::map<ZVertex, long long>;

inline ZVertex tau(ZVertex v) { return {v.level - 1, v.base}; }
inline ZVertex tau_inverse(ZVertex v) { return {v.level + 1, v.base}; }

std::vector<ZArrow> arrows_in(const ValuedQuiver& delta, ZVertex v);
std::vector<ZArrow> arrows_out(const ValuedQuiver& delta, ZVertex v);

Walk covering_map(const ZPath& p);
bool is_sectional(const ZPath& p);

// Throws Error(WalkNotReduced).
ZPath sectional_path_from_walk(const ValuedQuiver& delta, const Walk& w, int start_level);

// Throw Error(NotATree).
Section source_section(const ValuedQuiver& delta, ZVertex v);
Section sink_section(const ValuedQuiver& delta, ZVertex v);

// Levels a knitting window may span for a base quiver of the given rank.
int safety_bound(int rank);

// Sum of v' * f(y) over the arrows y -> v; an additive f satisfies f(tau v) + f(v) = mesh_sum.
// Returns nullopt when some f(y) is missing.
std::optional<long long> mesh_sum(const ValuedQuiver& delta, const ZFunction& f, ZVertex v);

// Unique additive extension of values given on a full section, restricted to levels lo..hi.
// Throws Error(WindowTooLarge | PositionOutOfRange | KnitInconsistent).
ZFunction knit_additive(const ValuedQuiver& delta, const ZFunction& section_values, int lo, int hi);

// Common path length from a to every vertex reachable within levels a.level..max_level.
// Throws Error(CrossCheckFailed) if two parallel paths differ in length.
std::map<ZVertex, int> z_distances_from(const ValuedQuiver& delta, ZVertex a, int max_level);

// Length common to all paths a ~> b in the repetitive quiver, found by dynamic programming
// over the finite level window; throws Error(CrossCheckFailed) if two paths differ in length.
std::optional<int> z_distance(const ValuedQuiver& delta, ZVertex a, ZVertex b);

}  // namespace arq
