#pragma once
// Test helpers and independent oracles. Nothing here calls the library's knitting,
// hammock or walk code; the oracles work directly from the quiver's arrow list.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "arq/arq.hpp"

namespace arqtest {

using arq::Family;
using arq::ValuedQuiver;

struct TypeSpec {
    Family family;
    int rank;
};

inline std::string name(TypeSpec t) {
    return std::string(1, arq::family_letter(t.family)) + std::to_string(t.rank);
}

// Every family and rank the acceptance criteria cover.
inline std::vector<TypeSpec> acceptance_types() {
    std::vector<TypeSpec> out;
    for (int n = 1; n <= 8; ++n) out.push_back({Family::A, n});
    for (int n = 2; n <= 8; ++n) out.push_back({Family::B, n});
    for (int n = 3; n <= 8; ++n) out.push_back({Family::C, n});
    for (int n = 4; n <= 8; ++n) out.push_back({Family::D, n});
    for (int n = 6; n <= 8; ++n) out.push_back({Family::E, n});
    out.push_back({Family::F, 4});
    out.push_back({Family::G, 2});
    return out;
}

inline std::vector<TypeSpec> types_up_to_rank(int max_rank) {
    std::vector<TypeSpec> out;
    for (const TypeSpec& t : acceptance_types())
        if (t.rank <= max_rank) out.push_back(t);
    return out;
}

// Canonical labels, orientation given by the bits of `mask` (bit e set: edge e reversed).
inline ValuedQuiver oriented(TypeSpec t, unsigned mask) {
    const arq::ValuedGraph g = arq::canonical_graph(t.family, t.rank);
    std::vector<bool> forward(g.edges().size());
    for (size_t e = 0; e < forward.size(); ++e) forward[e] = ((mask >> e) & 1U) == 0;
    return arq::orient(g, forward);
}

inline unsigned orientation_count(TypeSpec t) {
    return 1U << static_cast<unsigned>(t.rank - 1);
}

inline ValuedQuiver random_canonical(TypeSpec t, std::mt19937& rng) {
    return oriented(t, static_cast<unsigned>(rng()) & (orientation_count(t) - 1));
}

// Random orientation under a random vertex renaming.
inline ValuedQuiver random_relabelled(TypeSpec t, std::mt19937& rng) {
    std::vector<int> perm(static_cast<size_t>(t.rank));
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    return arq::relabel_quiver(random_canonical(t, rng), perm);
}

// Forward-arrow count on the unique walk x ~> y, found by depth-first search.
inline int forward_arrows(const ValuedQuiver& q, int x, int y) {
    struct Frame {
        int v, parent, fwd;
    };
    std::vector<Frame> stack{{x, 0, 0}};
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        if (f.v == y) return f.fwd;
        for (const arq::Arrow& a : q.arrows()) {
            if (a.src == f.v && a.dst != f.parent) stack.push_back({a.dst, f.v, f.fwd + 1});
            if (a.dst == f.v && a.src != f.parent) stack.push_back({a.src, f.v, f.fwd});
        }
    }
    return -1;
}

using Vec = std::vector<long long>;

// Positive roots of the valued graph: close the simple roots under simple reflections
// s_i(x)_i = -x_i + sum_j v_ji x_j, keeping the positive vectors.
inline std::set<Vec> positive_roots(const arq::ValuedGraph& g) {
    const int n = g.n();
    std::set<Vec> seen;
    std::vector<Vec> todo;
    for (int i = 0; i < n; ++i) {
        Vec e(static_cast<size_t>(n), 0);
        e[static_cast<size_t>(i)] = 1;
        seen.insert(e);
        todo.push_back(e);
    }
    while (!todo.empty()) {
        Vec x = todo.back();
        todo.pop_back();
        for (int i = 1; i <= n; ++i) {
            Vec y = x;
            long long s = -x[static_cast<size_t>(i - 1)];
            for (int j = 1; j <= n; ++j)
                if (j != i) s += static_cast<long long>(g.v(j, i)) * x[static_cast<size_t>(j - 1)];
            y[static_cast<size_t>(i - 1)] = s;
            if (s < 0) continue;
            if (seen.insert(y).second) todo.push_back(y);
        }
    }
    return seen;
}

// Preprojective knitting of the module category straight from Q.
// tau^{-r}P_i receives d_ik-weighted arrows from tau^{-r}P_k (arrows i->k)
// and d'_ji-weighted arrows from tau^{-(r-1)}P_j (arrows j->i).
struct Knit {
    std::map<std::pair<int, int>, Vec> dims;  // (r, i)
    std::vector<int> m;                        // m[i-1]
    std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> arrows;
};

inline Knit knit_from_projectives(const ValuedQuiver& q) {
    const int n = q.n();
    const size_t un = static_cast<size_t>(n);
    // Sinks first: k before i whenever i -> k.
    std::vector<int> order;
    std::vector<int> out_deg(un + 1, 0);
    for (const arq::Arrow& a : q.arrows()) ++out_deg[static_cast<size_t>(a.src)];
    std::vector<int> ready;
    for (int i = 1; i <= n; ++i)
        if (out_deg[static_cast<size_t>(i)] == 0) ready.push_back(i);
    while (!ready.empty()) {
        const int k = ready.back();
        ready.pop_back();
        order.push_back(k);
        for (const arq::Arrow& a : q.arrows())
            if (a.dst == k && --out_deg[static_cast<size_t>(a.src)] == 0) ready.push_back(a.src);
    }

    Knit kn;
    kn.m.assign(un, -1);
    std::vector<bool> alive(un + 1, true);
    auto get = [&](int r, int i) -> Vec {
        auto it = kn.dims.find({r, i});
        return it == kn.dims.end() ? Vec(un, 0) : it->second;
    };
    for (int r = 0; std::any_of(alive.begin() + 1, alive.end(), [](bool b) { return b; }); ++r) {
        for (int i : order) {
            if (!alive[static_cast<size_t>(i)]) continue;
            Vec d = r == 0 ? Vec(un, 0) : get(r - 1, i);
            for (auto& x : d) x = -x;
            if (r == 0) d[static_cast<size_t>(i - 1)] = 1;
            std::vector<std::pair<int, int>> preds;
            for (const arq::Arrow& a : q.arrows()) {
                if (a.src == i && kn.dims.count({r, a.dst})) {
                    const Vec p = get(r, a.dst);
                    for (size_t t = 0; t < un; ++t) d[t] += a.val.a * p[t];
                    preds.push_back({r, a.dst});
                }
                if (r > 0 && a.dst == i && kn.dims.count({r - 1, a.src})) {
                    const Vec p = get(r - 1, a.src);
                    for (size_t t = 0; t < un; ++t) d[t] += a.val.b * p[t];
                    preds.push_back({r - 1, a.src});
                }
            }
            const bool positive = std::all_of(d.begin(), d.end(), [](long long x) { return x >= 0; }) &&
                                  std::any_of(d.begin(), d.end(), [](long long x) { return x > 0; });
            if (!positive) {
                alive[static_cast<size_t>(i)] = false;
                continue;
            }
            kn.dims[{r, i}] = d;
            kn.m[static_cast<size_t>(i - 1)] = r;
            for (const auto& p : preds) kn.arrows.push_back({p, {r, i}});
        }
    }
    return kn;
}

// Shortest path lengths from `src` over the oracle knit's arrows (breadth-first).
inline std::map<std::pair<int, int>, int> knit_distances(const Knit& kn, std::pair<int, int> src) {
    std::map<std::pair<int, int>, int> dist{{src, 0}};
    std::vector<std::pair<int, int>> frontier{src};
    while (!frontier.empty()) {
        std::vector<std::pair<int, int>> next;
        for (const auto& v : frontier)
            for (const auto& [a, b] : kn.arrows)
                if (a == v && !dist.count(b)) {
                    dist[b] = dist[v] + 1;
                    next.push_back(b);
                }
        frontier = std::move(next);
    }
    return dist;
}

// Positions of the injectives read off the oracle knit: I_l is the module whose
// dimension vector equals the recursive dim I_l.
inline std::vector<Vec> injective_dims_recursive(const ValuedQuiver& q) {
    const size_t un = static_cast<size_t>(q.n());
    std::vector<Vec> out(un);
    std::vector<bool> done(un + 1, false);
    for (size_t round = 0; round < un; ++round)
        for (int l = 1; l <= q.n(); ++l) {
            if (done[static_cast<size_t>(l)]) continue;
            bool ready = true;
            Vec d(un, 0);
            d[static_cast<size_t>(l - 1)] = 1;
            for (const arq::Arrow& a : q.arrows())
                if (a.dst == l) {
                    if (!done[static_cast<size_t>(a.src)]) {
                        ready = false;
                        break;
                    }
                    for (size_t t = 0; t < un; ++t) d[t] += a.val.b * out[static_cast<size_t>(a.src - 1)][t];
                }
            if (!ready) continue;
            out[static_cast<size_t>(l - 1)] = d;
            done[static_cast<size_t>(l)] = true;
        }
    return out;
}

// Integer determinant by fraction-free elimination.
inline long long bareiss_det(std::vector<std::vector<long long>> a) {
    const size_t n = a.size();
    long long sign = 1, prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return n == 0 ? 1 : sign * a[n - 1][n - 1];
}

inline ValuedQuiver quiver_text(const std::string& text) {
    return arq::parse(text);
}

// The orientation of E6 with rho = (16)(25) and the F4 orientation 1->2, 2->3 (1,2), 4->3.
inline ValuedQuiver e6_example() {
    return arq::parse("n 6\narrow 1 2\narrow 2 3\narrow 3 4\narrow 3 5\narrow 6 5\n");
}
inline ValuedQuiver f4_example() {
    return arq::parse("n 4\narrow 1 2\narrow 2 3 1 2\narrow 4 3\n");
}
inline ValuedQuiver a3_linear() {
    return arq::parse("n 3\narrow 1 2\narrow 2 3\n");
}
inline ValuedQuiver g2() {
    return arq::parse("n 2\narrow 1 2 1 3\n");
}
inline ValuedQuiver a1() {
    return arq::parse("n 1\n");
}

}  // namespace arqtest
