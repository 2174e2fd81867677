#include "arq/quiver.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "arq/error.hpp"

namespace arq {

namespace {

std::string arrow_text(const Arrow& a) {
    return std::to_string(a.src) + "->" + std::to_string(a.dst);
}

}  // namespace

ValuedQuiver ValuedQuiver::validate(int n, std::vector<Arrow> arrows) {
    if (n < 0) throw Error(ErrorKind::DanglingVertexIndex, "negative vertex count");
    std::set<std::pair<int, int>> seen;
    for (size_t id = 0; id < arrows.size(); ++id) {
        const Arrow& a = arrows[id];
        const int item = static_cast<int>(id);
        if (a.src < 1 || a.src > n || a.dst < 1 || a.dst > n)
            throw Error(ErrorKind::DanglingVertexIndex,
                        "arrow " + arrow_text(a) + " leaves 1.." + std::to_string(n), 0, item);
        if (a.src == a.dst) throw Error(ErrorKind::LoopArrow, "arrow " + arrow_text(a), 0, item);
        if (a.val.a < 1 || a.val.b < 1)
            throw Error(ErrorKind::BadValuation,
                        "arrow " + arrow_text(a) + " has valuation (" + std::to_string(a.val.a) +
                            "," + std::to_string(a.val.b) + ")",
                        0, item);
        if (seen.count({a.src, a.dst}))
            throw Error(ErrorKind::MultipleArrow, "arrow " + arrow_text(a) + " repeated", 0, item);
        if (seen.count({a.dst, a.src}))
            throw Error(ErrorKind::TwoCycle, "arrows " + arrow_text(a) + " and its reverse", 0, item);
        seen.insert({a.src, a.dst});
    }
    ValuedQuiver q;
    q.n_ = n;
    q.arrows_ = std::move(arrows);
    q.out_.assign(static_cast<size_t>(n) + 1, {});
    q.in_.assign(static_cast<size_t>(n) + 1, {});
    for (size_t id = 0; id < q.arrows_.size(); ++id) {
        q.out_[static_cast<size_t>(q.arrows_[id].src)].push_back(static_cast<int>(id));
        q.in_[static_cast<size_t>(q.arrows_[id].dst)].push_back(static_cast<int>(id));
    }
    return q;
}

int ValuedQuiver::find_arrow(int x, int y) const {
    if (x < 1 || x > n_) return -1;
    for (int id : out_[static_cast<size_t>(x)])
        if (arrows_[static_cast<size_t>(id)].dst == y) return id;
    return -1;
}

ValuedGraph::ValuedGraph(int n, const std::vector<Edge>& edges) : n_(n) {
    adj_.assign(static_cast<size_t>(n) + 1, {});
    vmat_.assign(static_cast<size_t>((n + 1) * (n + 1)), 0);
    for (Edge e : edges) {
        if (e.x > e.y) e = {e.y, e.x, e.val.swapped()};
        edges_.push_back(e);
        adj_[static_cast<size_t>(e.x)].push_back(e.y);
        adj_[static_cast<size_t>(e.y)].push_back(e.x);
        vmat_[static_cast<size_t>(e.x * (n + 1) + e.y)] = e.val.a;
        vmat_[static_cast<size_t>(e.y * (n + 1) + e.x)] = e.val.b;
    }
    std::sort(edges_.begin(), edges_.end());
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

int ValuedGraph::v(int x, int y) const {
    if (x < 1 || y < 1 || x > n_ || y > n_) return 0;
    return vmat_[static_cast<size_t>(x * (n_ + 1) + y)];
}

int ValuedGraph::weight(int x) const {
    int w = 0;
    for (int y : neighbors(x)) w += v(x, y);
    return w;
}

int Walk::end(const ValuedQuiver& q) const {
    int v = start;
    for (const Step& s : steps) {
        const Arrow& a = q.arrow(s.arrow);
        v = s.forward ? a.dst : a.src;
    }
    return v;
}

bool Walk::is_reduced() const {
    for (size_t t = 1; t < steps.size(); ++t)
        if (steps[t].arrow == steps[t - 1].arrow && steps[t].forward != steps[t - 1].forward)
            return false;
    return true;
}

char family_letter(Family f) {
    return "ABCDEFG"[static_cast<int>(f)];
}

std::optional<Family> family_from_letter(char c) {
    if (c < 'A' || c > 'G') return std::nullopt;
    return static_cast<Family>(c - 'A');
}

std::string to_string(const DynkinClass& d) {
    return std::string(1, family_letter(d.family)) + " " + std::to_string(d.rank);
}

ValuedQuiver opposite(const ValuedQuiver& q) {
    std::vector<Arrow> arrows;
    arrows.reserve(q.arrows().size());
    for (const Arrow& a : q.arrows()) arrows.push_back({a.dst, a.src, a.val.swapped()});
    return ValuedQuiver::validate(q.n(), std::move(arrows));
}

ValuedGraph underlying_graph(const ValuedQuiver& q) {
    std::vector<Edge> edges;
    edges.reserve(q.arrows().size());
    for (const Arrow& a : q.arrows()) edges.push_back({a.src, a.dst, a.val});
    return ValuedGraph(q.n(), edges);
}

bool is_tree(const ValuedGraph& g) {
    const int n = g.n();
    if (n < 1 || static_cast<int>(g.edges().size()) != n - 1) return false;
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    std::deque<int> queue{1};
    seen[1] = true;
    int reached = 1;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int y : g.neighbors(x))
            if (!seen[static_cast<size_t>(y)]) {
                seen[static_cast<size_t>(y)] = true;
                ++reached;
                queue.push_back(y);
            }
    }
    return reached == n;
}

TreeWalks::TreeWalks(const ValuedQuiver& q) : n_(q.n()) {
    if (!is_tree(underlying_graph(q))) throw Error(ErrorKind::NotATree, "underlying graph is not a connected tree");
    counts_.assign(static_cast<size_t>(n_ * n_), {});
    parent_.assign(static_cast<size_t>(n_) + 1, {});
    for (int root = 1; root <= n_; ++root) {
        auto& par = parent_[static_cast<size_t>(root)];
        par.assign(static_cast<size_t>(n_) + 1, {0, {}});
        std::vector<bool> seen(static_cast<size_t>(n_) + 1, false);
        std::deque<int> queue{root};
        seen[static_cast<size_t>(root)] = true;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            const ArrowCounts cu = counts_[idx(root, u)];
            auto visit = [&](int v, Step s) {
                if (seen[static_cast<size_t>(v)]) return;
                seen[static_cast<size_t>(v)] = true;
                par[static_cast<size_t>(v)] = {u, s};
                ArrowCounts cv = cu;
                (s.forward ? cv.aplus : cv.aminus) += 1;
                counts_[idx(root, v)] = cv;
                queue.push_back(v);
            };
            for (int id : q.out_arrows(u)) visit(q.arrow(id).dst, {id, true});
            for (int id : q.in_arrows(u)) visit(q.arrow(id).src, {id, false});
        }
    }
}

Walk TreeWalks::walk(int x, int y) const {
    if (x < 1 || x > n_ || y < 1 || y > n_) throw Error(ErrorKind::DanglingVertexIndex, "walk endpoint out of range");
    Walk w{x, {}};
    const auto& par = parent_[static_cast<size_t>(x)];
    for (int v = y; v != x; v = par[static_cast<size_t>(v)].first) w.steps.push_back(par[static_cast<size_t>(v)].second);
    std::reverse(w.steps.begin(), w.steps.end());
    return w;
}

Walk reduced_walk(const ValuedQuiver& q, int x, int y) {
    return TreeWalks(q).walk(x, y);
}

ArrowCounts arrow_counts(const ValuedQuiver& q, int x, int y) {
    ArrowCounts c;
    for (const Step& s : reduced_walk(q, x, y).steps) (s.forward ? c.aplus : c.aminus) += 1;
    return c;
}

bool canonical_exists(Family f, int rank) {
    switch (f) {
        case Family::A: return rank >= 1;
        case Family::B: return rank >= 2;
        case Family::C: return rank >= 3;
        case Family::D: return rank >= 4;
        case Family::E: return rank >= 6 && rank <= 8;
        case Family::F: return rank == 4;
        case Family::G: return rank == 2;
    }
    return false;
}

ValuedGraph canonical_graph(Family f, int n) {
    if (!canonical_exists(f, n))
        throw Error(ErrorKind::NotDynkin, "no canonical diagram " + std::string(1, family_letter(f)) + std::to_string(n));
    std::vector<Edge> e;
    auto path = [&](int from, int to) {
        for (int x = from; x < to; ++x) e.push_back({x, x + 1, {1, 1}});
    };
    switch (f) {
        case Family::A: path(1, n); break;
        case Family::B: e.push_back({1, 2, {1, 2}}); path(2, n); break;
        case Family::C: e.push_back({1, 2, {2, 1}}); path(2, n); break;
        case Family::D:
            e.push_back({1, 3, {1, 1}});
            e.push_back({2, 3, {1, 1}});
            path(3, n);
            break;
        case Family::E:
            e.push_back({1, 2, {1, 1}});
            e.push_back({2, 3, {1, 1}});
            e.push_back({3, 4, {1, 1}});
            e.push_back({3, 5, {1, 1}});
            path(5, n);
            break;
        case Family::F:
            e.push_back({1, 2, {1, 1}});
            e.push_back({2, 3, {1, 2}});
            e.push_back({3, 4, {1, 1}});
            break;
        case Family::G: e.push_back({1, 2, {1, 3}}); break;
    }
    return ValuedGraph(n, e);
}

namespace {

// Vertices of the arm leaving `center` through `first`, ordered outward.
std::vector<int> arm(const ValuedGraph& g, int center, int first) {
    std::vector<int> out{first};
    int prev = center, cur = first;
    while (true) {
        int next = 0;
        for (int y : g.neighbors(cur))
            if (y != prev) next = y;
        if (next == 0) break;
        out.push_back(next);
        prev = cur;
        cur = next;
    }
    return out;
}

bool is_isomorphism(const ValuedGraph& g, const ValuedGraph& canon, const std::vector<int>& r) {
    const int n = g.n();
    std::vector<int> sorted = r;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i)
        if (sorted[static_cast<size_t>(i)] != i + 1) return false;
    if (g.edges().size() != canon.edges().size()) return false;
    for (const Edge& e : g.edges()) {
        int x = r[static_cast<size_t>(e.x - 1)], y = r[static_cast<size_t>(e.y - 1)];
        if (canon.v(x, y) != e.val.a || canon.v(y, x) != e.val.b) return false;
    }
    return true;
}

std::optional<DynkinClass> classify_branched(const ValuedGraph& g, int center) {
    const int n = g.n();
    for (const Edge& e : g.edges())
        if (!e.val.trivial()) return std::nullopt;
    std::vector<std::vector<int>> arms;
    for (int y : g.neighbors(center)) arms.push_back(arm(g, center, y));
    std::sort(arms.begin(), arms.end(), [](const auto& p, const auto& q) {
        if (p.size() != q.size()) return p.size() < q.size();
        return p.back() < q.back();
    });
    DynkinClass d;
    d.rank = n;
    d.relabel.assign(static_cast<size_t>(n), 0);
    auto set = [&](int x, int c) { d.relabel[static_cast<size_t>(x - 1)] = c; };
    const size_t s0 = arms[0].size(), s1 = arms[1].size(), s2 = arms[2].size();
    if (s0 == 1 && s1 == 1) {
        d.family = Family::D;
        set(arms[0][0], 1);
        set(arms[1][0], 2);
        set(center, 3);
        for (size_t j = 0; j < s2; ++j) set(arms[2][j], 4 + static_cast<int>(j));
    } else if (s0 == 1 && s1 == 2 && s2 >= 2 && s2 <= 4) {
        d.family = Family::E;
        set(arms[0][0], 4);
        set(center, 3);
        set(arms[1][0], 2);
        set(arms[1][1], 1);
        for (size_t j = 0; j < s2; ++j) set(arms[2][j], 5 + static_cast<int>(j));
    } else {
        return std::nullopt;
    }
    return d;
}

std::optional<DynkinClass> classify_path(const ValuedGraph& g) {
    const int n = g.n();
    int start = 0;
    for (int x = 1; x <= n && start == 0; ++x)
        if (g.neighbors(x).size() == 1) start = x;
    const std::vector<int> path = arm(g, 0, start);
    std::vector<int> nontrivial;  // positions p with edge path[p]--path[p+1] non-trivial
    for (int p = 0; p + 1 < n; ++p) {
        int x = path[static_cast<size_t>(p)], y = path[static_cast<size_t>(p + 1)];
        if (g.v(x, y) != 1 || g.v(y, x) != 1) nontrivial.push_back(p);
    }
    DynkinClass d;
    d.rank = n;
    auto assign = [&](const std::vector<int>& order) {
        d.relabel.assign(static_cast<size_t>(n), 0);
        for (int p = 0; p < n; ++p) d.relabel[static_cast<size_t>(order[static_cast<size_t>(p)] - 1)] = p + 1;
    };
    auto reversed = [&]() {
        std::vector<int> r(path.rbegin(), path.rend());
        return r;
    };
    if (nontrivial.empty()) {
        d.family = Family::A;
        assign(path.front() < path.back() ? path : reversed());
        return d;
    }
    if (nontrivial.size() > 1) return std::nullopt;
    const int p = nontrivial[0];
    if (n == 2) {
        int x = path[0], y = path[1];
        std::pair<int, int> val{g.v(x, y), g.v(y, x)};
        std::vector<int> order = val.first == 1 ? path : reversed();
        int big = std::max(val.first, val.second), small = std::min(val.first, val.second);
        if (small != 1) return std::nullopt;
        if (big == 2) d.family = Family::B;
        else if (big == 3) d.family = Family::G;
        else return std::nullopt;
        assign(order);
        return d;
    }
    if (p == 0 || p == n - 2) {
        std::vector<int> order = p == 0 ? path : reversed();
        int e = order[0], nb = order[1];
        if (g.v(e, nb) == 1 && g.v(nb, e) == 2) d.family = Family::B;
        else if (g.v(e, nb) == 2 && g.v(nb, e) == 1) d.family = Family::C;
        else return std::nullopt;
        assign(order);
        return d;
    }
    if (n == 4 && p == 1) {
        int x = path[1], y = path[2];
        std::vector<int> order;
        if (g.v(x, y) == 1 && g.v(y, x) == 2) order = path;
        else if (g.v(x, y) == 2 && g.v(y, x) == 1) order = reversed();
        else return std::nullopt;
        d.family = Family::F;
        assign(order);
        return d;
    }
    return std::nullopt;
}

}  // namespace

std::optional<DynkinClass> classify_dynkin(const ValuedGraph& g) {
    const int n = g.n();
    if (!is_tree(g)) return std::nullopt;
    std::optional<DynkinClass> d;
    if (n == 1) {
        d = DynkinClass{Family::A, 1, {1}};
    } else {
        int branch = 0, branches = 0;
        for (int x = 1; x <= n; ++x) {
            size_t deg = g.neighbors(x).size();
            if (deg > 3) return std::nullopt;
            if (deg == 3) {
                branch = x;
                ++branches;
            }
        }
        if (branches > 1) return std::nullopt;
        d = branches == 1 ? classify_branched(g, branch) : classify_path(g);
    }
    if (!d || !canonical_exists(d->family, n)) return std::nullopt;
    if (!is_isomorphism(g, canonical_graph(d->family, n), d->relabel))
        throw Error(ErrorKind::CrossCheckFailed, "classification relabel is not a valued-graph isomorphism");
    return d;
}

ValuedQuiver orient(const ValuedGraph& g, const std::vector<bool>& forward) {
    std::vector<Arrow> arrows;
    const auto& edges = g.edges();
    for (size_t e = 0; e < edges.size(); ++e) {
        const Edge& ed = edges[e];
        if (e < forward.size() && !forward[e]) arrows.push_back({ed.y, ed.x, ed.val.swapped()});
        else arrows.push_back({ed.x, ed.y, ed.val});
    }
    return ValuedQuiver::validate(g.n(), std::move(arrows));
}

ValuedQuiver relabel_quiver(const ValuedQuiver& q, const std::vector<int>& perm) {
    std::vector<Arrow> arrows;
    for (const Arrow& a : q.arrows())
        arrows.push_back({perm[static_cast<size_t>(a.src - 1)], perm[static_cast<size_t>(a.dst - 1)], a.val});
    return ValuedQuiver::validate(q.n(), std::move(arrows));
}

}  // namespace arq
