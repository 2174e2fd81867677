#include "arq/hammock.hpp"

#include <algorithm>
#include <set>

#include "arq/error.hpp"
#include "checked.hpp"

namespace arq {

using detail::checked_mul;
using detail::checked_sub;

namespace {

void check_vertex(const ValuedQuiver& q, int k) {
    if (k < 1 || k > q.n()) throw Error(ErrorKind::DanglingVertexIndex, "vertex " + std::to_string(k) + " not in quiver");
}

}  // namespace

ZFunction seed_section(const ValuedQuiver& qop, int k) {
    check_vertex(qop, k);
    TreeWalks tw(qop);
    ZFunction seeds;
    for (int j = 1; j <= qop.n(); ++j) {
        ZPath p = sectional_path_from_walk(qop, tw.walk(k, j), 0);
        long long value = 1;
        for (const ZArrow& a : p.arrows) value = checked_mul(value, a.val.b);
        seeds.emplace(p.vertices.back(), value);
    }
    return seeds;
}

HammockResult knit_hammock(const ValuedQuiver& q, int k) {
    check_vertex(q, k);
    const int n = q.n();
    const ValuedQuiver qop = opposite(q);
    const TreeWalks tw(qop);
    const ZFunction seeds = seed_section(qop, k);

    // (r,i) lies in Suc(0,k) iff r >= base_level[i]; its path length from (0,k) is
    // length(k,i) + 2 (r - base_level[i]).
    std::vector<int> base_level(static_cast<size_t>(n) + 1), base_len(static_cast<size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) {
        base_level[static_cast<size_t>(i)] = tw.aminus(k, i);
        base_len[static_cast<size_t>(i)] = tw.length(k, i);
    }

    HammockResult res;
    res.k = k;
    const int bound = safety_bound(n);
    int stop_len = -1;  // last path length to knit once the terminator is known
    for (int len = 0;; ++len) {
        if (stop_len >= 0 && len > stop_len) break;
        std::vector<ZVertex> layer;
        for (int i = 1; i <= n; ++i) {
            int extra = len - base_len[static_cast<size_t>(i)];
            if (extra >= 0 && extra % 2 == 0) layer.push_back({base_level[static_cast<size_t>(i)] + extra / 2, i});
        }
        std::sort(layer.begin(), layer.end());
        if (!layer.empty() && layer.front().level > bound)
            throw Error(ErrorKind::BoundExceeded, "no value -1 within " + std::to_string(bound) + " levels");
        for (const ZVertex& v : layer) {
            long long value;
            if (v.level == base_level[static_cast<size_t>(v.base)]) {
                value = seeds.at(v);
            } else {
                auto s = mesh_sum(qop, res.table, v);
                if (!s) throw Error(ErrorKind::KnitInconsistent, "predecessor outside the successor set");
                value = checked_sub(*s, res.table.at(tau(v)));
            }
            res.table.emplace(v, value);
            if (stop_len < 0 && value < 0) {
                if (value != -1)
                    throw Error(ErrorKind::KnitInconsistent,
                                "first negative value " + std::to_string(value) + " at (" + std::to_string(v.level) +
                                    "," + std::to_string(v.base) + ")");
                res.terminator = v;
                stop_len = len + 1;
            }
        }
    }

    const ZVertex t = res.terminator;
    res.m_of = t.level - 1;
    res.rho_pair = {t.base, k};
    const ZVertex last{t.level - 1, t.base};
    auto before = res.table.find(last);
    if (before == res.table.end() || before->second <= 0)
        throw Error(ErrorKind::KnitInconsistent, "vertex before the terminator is not positive");
    for (const auto& [v, value] : res.table) {
        // (r,j) reaches (s,i) in the repetitive quiver of Q^op iff s - r >= a+_Q(j,i).
        if (last.level - v.level - tw.aminus(v.base, last.base) >= 0) {
            if (value < 0) throw Error(ErrorKind::KnitInconsistent, "negative value inside the hammock hull");
            res.hull.push_back(v);
        }
    }
    return res;
}

std::vector<ZVertex> hammock_vertices(const HammockResult& res) {
    std::vector<ZVertex> out;
    for (const ZVertex& v : res.hull)
        if (res.table.at(v) > 0) out.push_back(v);
    return out;
}

long long composition_multiplicity(const HammockResult& res, ZVertex pos) {
    if (pos.level < 0) throw Error(ErrorKind::PositionOutOfRange, "negative level");
    if (!std::binary_search(res.hull.begin(), res.hull.end(), pos)) return 0;
    return res.table.at(pos);
}

InducedSubquiver hammock_subquiver(const ValuedQuiver& q, const HammockResult& res) {
    const ValuedQuiver qop = opposite(q);
    InducedSubquiver sub;
    sub.vertices = hammock_vertices(res);
    std::set<ZVertex> members(sub.vertices.begin(), sub.vertices.end());
    for (const ZVertex& v : sub.vertices)
        for (const ZArrow& a : arrows_out(qop, v))
            if (members.count(a.dst)) sub.arrows.push_back(a);
    return sub;
}

}  // namespace arq
