#include "arq/dag.hpp"

#include <algorithm>
#include <limits>

#include "arq/error.hpp"

namespace arq {

std::vector<int> topological_order(const std::vector<std::vector<int>>& out) {
    const size_t n = out.size();
    std::vector<int> indeg(n, 0);
    for (const auto& succ : out)
        for (int v : succ) ++indeg[static_cast<size_t>(v)];
    std::vector<int> order, ready;
    for (size_t v = n; v-- > 0;)
        if (indeg[v] == 0) ready.push_back(static_cast<int>(v));
    while (!ready.empty()) {
        int u = ready.back();
        ready.pop_back();
        order.push_back(u);
        for (int v : out[static_cast<size_t>(u)])
            if (--indeg[static_cast<size_t>(v)] == 0) ready.push_back(v);
    }
    if (order.size() != n) throw Error(ErrorKind::CrossCheckFailed, "directed cycle in a graph expected to be acyclic");
    return order;
}

std::vector<PathStats> paths_from(const std::vector<std::vector<int>>& out, const std::vector<int>& topo, int src) {
    constexpr std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
    std::vector<PathStats> st(out.size());
    st[static_cast<size_t>(src)] = {true, 0, 0, 1};
    for (int u : topo) {
        const PathStats su = st[static_cast<size_t>(u)];
        if (!su.reachable) continue;
        for (int v : out[static_cast<size_t>(u)]) {
            PathStats& sv = st[static_cast<size_t>(v)];
            if (!sv.reachable) {
                sv = {true, su.min_len + 1, su.max_len + 1, su.count};
            } else {
                sv.min_len = std::min(sv.min_len, su.min_len + 1);
                sv.max_len = std::max(sv.max_len, su.max_len + 1);
                sv.count = sv.count > cap - su.count ? cap : sv.count + su.count;
            }
        }
    }
    return st;
}

}  // namespace arq
