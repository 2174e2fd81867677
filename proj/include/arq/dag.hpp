#pragma once

#include <cstdint>
#include <vector>

namespace arq {

// Path statistics from one source in a finite acyclic digraph.
struct PathStats {
    bool reachable = false;
    int min_len = 0;
    int max_len = 0;
    std::uint64_t count = 0;  // saturates at UINT64_MAX
};

// Vertices in topological order; throws Error(CrossCheckFailed) on a cycle.
std::vector<int> topological_order(const std::vector<std::vector<int>>& out);

std::vector<PathStats> paths_from(const std::vector<std::vector<int>>& out, const std::vector<int>& topo, int src);

}  // namespace arq
