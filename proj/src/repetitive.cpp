#include "arq/repetitive.hpp"

#include "arq/dag.hpp"
#include "arq/error.hpp"
#include "checked.hpp"

namespace arq {

using detail::checked_add;
using detail::checked_mul;
using detail::checked_sub;

std::vector<ZArrow> arrows_in(const ValuedQuiver& delta, ZVertex v) {
    std::vector<ZArrow> out;
    if (v.base < 1 || v.base > delta.n()) return out;
    for (int id : delta.in_arrows(v.base)) {
        const Arrow& a = delta.arrow(id);
        out.push_back({{v.level, a.src}, v, a.val, ZKind::Plain, id});
    }
    for (int id : delta.out_arrows(v.base)) {
        const Arrow& a = delta.arrow(id);
        out.push_back({{v.level - 1, a.dst}, v, a.val.swapped(), ZKind::Star, id});
    }
    return out;
}

std::vector<ZArrow> arrows_out(const ValuedQuiver& delta, ZVertex v) {
    std::vector<ZArrow> out;
    if (v.base < 1 || v.base > delta.n()) return out;
    for (int id : delta.out_arrows(v.base)) {
        const Arrow& a = delta.arrow(id);
        out.push_back({v, {v.level, a.dst}, a.val, ZKind::Plain, id});
    }
    for (int id : delta.in_arrows(v.base)) {
        const Arrow& a = delta.arrow(id);
        out.push_back({v, {v.level + 1, a.src}, a.val.swapped(), ZKind::Star, id});
    }
    return out;
}

Walk covering_map(const ZPath& p) {
    Walk w{p.vertices.empty() ? 0 : p.vertices.front().base, {}};
    for (const ZArrow& a : p.arrows) w.steps.push_back({a.arrow, a.kind == ZKind::Plain});
    return w;
}

bool is_sectional(const ZPath& p) {
    return covering_map(p).is_reduced();
}

ZPath sectional_path_from_walk(const ValuedQuiver& delta, const Walk& w, int start_level) {
    if (!w.is_reduced()) throw Error(ErrorKind::WalkNotReduced, "walk contains an arrow followed by its inverse");
    ZPath p;
    ZVertex cur{start_level, w.start};
    p.vertices.push_back(cur);
    for (const Step& s : w.steps) {
        const Arrow& a = delta.arrow(s.arrow);
        ZArrow za;
        if (s.forward) {
            if (cur.base != a.src) throw Error(ErrorKind::WalkNotReduced, "walk steps do not compose");
            za = {cur, {cur.level, a.dst}, a.val, ZKind::Plain, s.arrow};
        } else {
            if (cur.base != a.dst) throw Error(ErrorKind::WalkNotReduced, "walk steps do not compose");
            za = {cur, {cur.level + 1, a.src}, a.val.swapped(), ZKind::Star, s.arrow};
        }
        p.arrows.push_back(za);
        cur = za.dst;
        p.vertices.push_back(cur);
    }
    return p;
}

namespace {

Section section_from_levels(const ValuedQuiver& delta, const std::vector<int>& level) {
    Section s;
    for (int j = 1; j <= delta.n(); ++j) s.vertices.push_back({level[static_cast<size_t>(j - 1)], j});
    for (int id = 0; id < static_cast<int>(delta.arrows().size()); ++id) {
        const Arrow& a = delta.arrow(id);
        int lx = s.level_of(a.src), ly = s.level_of(a.dst);
        if (lx == ly) s.arrows.push_back({{lx, a.src}, {lx, a.dst}, a.val, ZKind::Plain, id});
        else if (lx == ly + 1) s.arrows.push_back({{ly, a.dst}, {lx, a.src}, a.val.swapped(), ZKind::Star, id});
    }
    return s;
}

}  // namespace

Section source_section(const ValuedQuiver& delta, ZVertex v) {
    TreeWalks tw(delta);
    std::vector<int> level;
    for (int j = 1; j <= delta.n(); ++j) level.push_back(v.level + tw.aminus(v.base, j));
    return section_from_levels(delta, level);
}

Section sink_section(const ValuedQuiver& delta, ZVertex v) {
    TreeWalks tw(delta);
    std::vector<int> level;
    for (int j = 1; j <= delta.n(); ++j) level.push_back(v.level - tw.aminus(j, v.base));
    return section_from_levels(delta, level);
}

int safety_bound(int rank) {
    return 4 * (rank < 1 ? 1 : rank) * 30;
}

std::optional<long long> mesh_sum(const ValuedQuiver& delta, const ZFunction& f, ZVertex v) {
    long long sum = 0;
    for (const ZArrow& a : arrows_in(delta, v)) {
        auto it = f.find(a.src);
        if (it == f.end()) return std::nullopt;
        sum = checked_add(sum, checked_mul(a.val.b, it->second));
    }
    return sum;
}

ZFunction knit_additive(const ValuedQuiver& delta, const ZFunction& section_values, int lo, int hi) {
    const int n = delta.n();
    if (hi < lo || hi - lo > safety_bound(n))
        throw Error(ErrorKind::WindowTooLarge, "window of " + std::to_string(hi - lo + 1) + " levels");
    std::vector<int> low(static_cast<size_t>(n) + 1, 0), high(static_cast<size_t>(n) + 1, 0);
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    for (const auto& [v, val] : section_values) {
        if (v.base < 1 || v.base > n || seen[static_cast<size_t>(v.base)])
            throw Error(ErrorKind::PositionOutOfRange, "section values must meet every tau-orbit exactly once");
        seen[static_cast<size_t>(v.base)] = true;
        low[static_cast<size_t>(v.base)] = high[static_cast<size_t>(v.base)] = v.level;
    }
    if (static_cast<int>(section_values.size()) != n)
        throw Error(ErrorKind::PositionOutOfRange, "section values must meet every tau-orbit exactly once");
    for (int i = 1; i <= n; ++i)
        if (low[static_cast<size_t>(i)] < lo - safety_bound(n) || high[static_cast<size_t>(i)] > hi + safety_bound(n))
            throw Error(ErrorKind::WindowTooLarge, "section lies too far from the window");

    ZFunction f = section_values;
    bool progress = true;
    while (progress) {
        progress = false;
        for (int i = 1; i <= n; ++i) {
            auto& h = high[static_cast<size_t>(i)];
            while (h < hi) {
                ZVertex v{h + 1, i};
                auto s = mesh_sum(delta, f, v);
                if (!s) break;
                f[v] = checked_sub(*s, f.at(tau(v)));
                ++h;
                progress = true;
            }
            auto& l = low[static_cast<size_t>(i)];
            while (l > lo) {
                ZVertex v{l, i};
                auto s = mesh_sum(delta, f, v);
                if (!s) break;
                f[tau(v)] = checked_sub(*s, f.at(v));
                --l;
                progress = true;
            }
        }
    }
    for (int i = 1; i <= n; ++i)
        if (low[static_cast<size_t>(i)] > lo || high[static_cast<size_t>(i)] < hi)
            throw Error(ErrorKind::KnitInconsistent, "section values do not determine the window");

    ZFunction out;
    for (const auto& [v, val] : f)
        if (v.level >= lo && v.level <= hi) out.emplace(v, val);
    return out;
}

std::map<ZVertex, int> z_distances_from(const ValuedQuiver& delta, ZVertex a, int max_level) {
    const int n = delta.n();
    std::map<ZVertex, int> dist;
    if (a.base < 1 || a.base > n || max_level < a.level) return dist;
    const long long levels = static_cast<long long>(max_level) - a.level + 1;
    if (levels * n > 4'000'000) throw Error(ErrorKind::WindowTooLarge, "distance window too large");
    auto index = [&](ZVertex v) { return (v.level - a.level) * n + (v.base - 1); };
    std::vector<std::vector<int>> out(static_cast<size_t>(levels * n));
    for (int l = a.level; l <= max_level; ++l)
        for (int i = 1; i <= n; ++i)
            for (const ZArrow& z : arrows_out(delta, {l, i}))
                if (z.dst.level <= max_level) out[static_cast<size_t>(index(z.src))].push_back(index(z.dst));
    auto stats = paths_from(out, topological_order(out), index(a));
    for (int l = a.level; l <= max_level; ++l)
        for (int i = 1; i <= n; ++i) {
            const PathStats& s = stats[static_cast<size_t>(index({l, i}))];
            if (!s.reachable) continue;
            if (s.min_len != s.max_len)
                throw Error(ErrorKind::CrossCheckFailed, "parallel paths of different lengths");
            dist.emplace(ZVertex{l, i}, s.min_len);
        }
    return dist;
}

std::optional<int> z_distance(const ValuedQuiver& delta, ZVertex a, ZVertex b) {
    auto dist = z_distances_from(delta, a, b.level);
    auto it = dist.find(b);
    if (it == dist.end()) return std::nullopt;
    return it->second;
}

}  // namespace arq
