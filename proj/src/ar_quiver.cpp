#include "arq/ar_quiver.hpp"

#include <algorithm>

#include "arq/coxeter.hpp"
#include "arq/dag.hpp"
#include "arq/error.hpp"

namespace arq {

int ARQuiver::index_of(ZVertex v) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || *it != v) return -1;
    return static_cast<int>(it - vertices.begin());
}

namespace {

DynkinClass require_dynkin(const ValuedQuiver& q) {
    auto d = classify_dynkin(underlying_graph(q));
    if (!d) throw Error(ErrorKind::NotDynkin, "underlying valued graph is not a Dynkin diagram");
    return *d;
}

std::string pos_text(ZVertex v) {
    return "(" + std::to_string(v.level) + "," + std::to_string(v.base) + ")";
}

}  // namespace

ARQuiver build(const ValuedQuiver& q) {
    ARQuiver arq;
    arq.q = q;
    arq.qop = opposite(q);
    arq.dynkin = require_dynkin(q);
    const int n = q.n();
    arq.m.assign(static_cast<size_t>(n), -1);
    arq.rho.assign(static_cast<size_t>(n), 0);
    for (int k = 1; k <= n; ++k) {
        HammockResult h = knit_hammock(q, k);
        const int i = h.rho_pair.first;
        if (arq.rho[static_cast<size_t>(i - 1)] != 0)
            throw Error(ErrorKind::CrossCheckFailed, "two injectives in the tau-orbit of P_" + std::to_string(i));
        arq.rho[static_cast<size_t>(i - 1)] = k;
        arq.m[static_cast<size_t>(i - 1)] = h.m_of;
        arq.hammocks.push_back(std::move(h));
    }
    for (int i = 1; i <= n; ++i)
        for (int r = 0; r <= arq.m_of(i); ++r) arq.vertices.push_back({r, i});
    std::sort(arq.vertices.begin(), arq.vertices.end());
    for (const ZVertex& v : arq.vertices)
        for (const ZArrow& a : arrows_out(arq.qop, v))
            if (arq.contains(a.dst)) arq.arrows.push_back(a);
    for (const ZVertex& v : arq.vertices) {
        DimVector d(static_cast<size_t>(n), 0);
        for (int k = 1; k <= n; ++k)
            d[static_cast<size_t>(k - 1)] = composition_multiplicity(arq.hammocks[static_cast<size_t>(k - 1)], v);
        arq.dims.emplace(v, std::move(d));
    }
    for (int i = 1; i <= n; ++i)
        if (arq.dims.at({0, i})[static_cast<size_t>(i - 1)] != 1)
            throw Error(ErrorKind::CrossCheckFailed, "S_" + std::to_string(i) + " is not simple in top of P_" + std::to_string(i));
    return arq;
}

RhoM closed_form_rho_m(const ValuedQuiver& q) {
    const DynkinClass d = require_dynkin(q);
    const int n = q.n();
    const ValuedQuiver canon = relabel_quiver(q, d.relabel);
    const TreeWalks tw(canon);
    std::vector<int> mc(static_cast<size_t>(n) + 1), rc(static_cast<size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) rc[static_cast<size_t>(i)] = i;
    auto mset = [&](int i, int value) { mc[static_cast<size_t>(i)] = value; };
    if (d.family == Family::A) {
        for (int i = 1; i <= n; ++i) {
            rc[static_cast<size_t>(i)] = n + 1 - i;
            mset(i, tw.aplus(1, i) + tw.aminus(1, n + 1 - i));
        }
    } else if (d.family == Family::E && n == 6) {
        rc = {0, 6, 5, 3, 4, 2, 1};
        for (int i = 1; i <= n; ++i) mset(i, 5 - tw.aplus(i, 3) + tw.aplus(rc[static_cast<size_t>(i)], 3));
    } else if (d.family == Family::D && n % 2 == 1) {
        rc[1] = 2;
        rc[2] = 1;
        for (int i = 3; i <= n; ++i) mset(i, n - 2);
        mset(1, (n - 2) - tw.aplus(1, 3) + tw.aplus(2, 3));
        mset(2, (n - 2) + tw.aplus(1, 3) - tw.aplus(2, 3));
    } else {
        const int half = table_order(d.family, n) / 2 - 1;
        for (int i = 1; i <= n; ++i) mset(i, half);
    }
    std::vector<int> inverse(static_cast<size_t>(n) + 1);
    for (int x = 1; x <= n; ++x) inverse[static_cast<size_t>(d.relabel[static_cast<size_t>(x - 1)])] = x;
    RhoM out;
    for (int x = 1; x <= n; ++x) {
        const int c = d.relabel[static_cast<size_t>(x - 1)];
        out.m.push_back(mc[static_cast<size_t>(c)]);
        out.rho.push_back(inverse[static_cast<size_t>(rc[static_cast<size_t>(c)])]);
    }
    return out;
}

DimVector dim_vector(const ARQuiver& arq, ZVertex pos) {
    auto it = arq.dims.find(pos);
    if (it == arq.dims.end()) throw Error(ErrorKind::PositionOutOfRange, pos_text(pos) + " is not a vertex");
    return it->second;
}

std::vector<std::vector<int>> adjacency(const ARQuiver& arq) {
    std::vector<std::vector<int>> out(arq.vertices.size());
    for (const ZArrow& a : arq.arrows) out[static_cast<size_t>(arq.index_of(a.src))].push_back(arq.index_of(a.dst));
    return out;
}

std::vector<int> distances_from(const ARQuiver& arq, ZVertex a) {
    const int src = arq.index_of(a);
    if (src < 0) throw Error(ErrorKind::PositionOutOfRange, pos_text(a) + " is not a vertex");
    const auto out = adjacency(arq);
    const auto stats = paths_from(out, topological_order(out), src);
    std::vector<int> dist(stats.size(), -1);
    for (size_t v = 0; v < stats.size(); ++v) {
        if (!stats[v].reachable) continue;
        if (stats[v].min_len != stats[v].max_len)
            throw Error(ErrorKind::CrossCheckFailed,
                        "paths " + pos_text(a) + " ~> " + pos_text(arq.vertices[v]) + " differ in length");
        dist[v] = stats[v].min_len;
    }
    return dist;
}

std::optional<int> distance(const ARQuiver& arq, ZVertex a, ZVertex b) {
    const int dst = arq.index_of(b);
    if (dst < 0) throw Error(ErrorKind::PositionOutOfRange, pos_text(b) + " is not a vertex");
    const int d = distances_from(arq, a)[static_cast<size_t>(dst)];
    if (d < 0) return std::nullopt;
    return d;
}

Counts counts_and_nilpotency(const ARQuiver& arq, int order) {
    const int n = arq.n();
    Counts c;
    for (int i = 1; i <= n; ++i) c.indecomposables += arq.m_of(i) + 1;
    if (2 * c.indecomposables != static_cast<long long>(n) * order)
        throw Error(ErrorKind::CrossCheckFailed, "indecomposable count " + std::to_string(c.indecomposables) +
                                                     " differs from n|C|/2 with |C| = " + std::to_string(order));
    for (int i = 1; i <= n; ++i) {
        auto d = distance(arq, arq.projective(i), arq.injective(i));
        if (!d || *d != order - 2)
            throw Error(ErrorKind::CrossCheckFailed, "dist(P_" + std::to_string(i) + ", I_" + std::to_string(i) +
                                                         ") is not |C| - 2");
    }
    c.nilpotency = order - 1;
    return c;
}

bool pi_index_relation_check(const ARQuiver& arq) {
    const TreeWalks tw(arq.q);
    for (int i = 1; i <= arq.n(); ++i)
        for (int j = 1; j <= arq.n(); ++j)
            if (arq.m_of(i) - arq.m_of(j) != tw.aplus(arq.rho_of(i), arq.rho_of(j)) - tw.aplus(i, j)) return false;
    return true;
}

}  // namespace arq
