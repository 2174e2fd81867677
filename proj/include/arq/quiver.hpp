#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace arq {

struct Valuation {
    int a = 1;
    int b = 1;

    Valuation swapped() const { return {b, a}; }
    bool trivial() const { return a == 1 && b == 1; }
    auto operator<=>(const Valuation&) const = default;
};

struct Arrow {
    int src = 0;
    int dst = 0;
    Valuation val;

    auto operator<=>(const Arrow&) const = default;
};

// Finite valued quiver on vertices 1..n. Only constructible through validate().
class ValuedQuiver {
public:
    ValuedQuiver() = default;

    // Throws Error(LoopArrow | TwoCycle | MultipleArrow | BadValuation | DanglingVertexIndex);
    // Error::item() is the index of the offending arrow.
    static ValuedQuiver validate(int n, std::vector<Arrow> arrows);

    int n() const { return n_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const Arrow& arrow(int id) const { return arrows_[static_cast<size_t>(id)]; }
    // Arrow ids leaving / entering vertex v.
    const std::vector<int>& out_arrows(int v) const { return out_[static_cast<size_t>(v)]; }
    const std::vector<int>& in_arrows(int v) const { return in_[static_cast<size_t>(v)]; }
    // Id of the arrow x->y, or -1.
    int find_arrow(int x, int y) const;

    bool operator==(const ValuedQuiver& o) const { return n_ == o.n_ && arrows_ == o.arrows_; }

private:
    int n_ = 0;
    std::vector<Arrow> arrows_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
};

struct Edge {
    int x = 0;  // x < y
    int y = 0;
    Valuation val;  // (v_xy, v_yx)

    auto operator<=>(const Edge&) const = default;
};

class ValuedGraph {
public:
    ValuedGraph() = default;
    // Edges may be given in either orientation; they are stored with x < y.
    ValuedGraph(int n, const std::vector<Edge>& edges);

    int n() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    // v_xy, or 0 when x and y are not adjacent.
    int v(int x, int y) const;
    int weight(int x) const;
    const std::vector<int>& neighbors(int x) const { return adj_[static_cast<size_t>(x)]; }

    bool operator==(const ValuedGraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> vmat_;
};

struct Step {
    int arrow = 0;
    bool forward = true;

    auto operator<=>(const Step&) const = default;
};

struct Walk {
    int start = 0;
    std::vector<Step> steps;

    int length() const { return static_cast<int>(steps.size()); }
    int end(const ValuedQuiver& q) const;
    bool is_reduced() const;
    bool operator==(const Walk&) const = default;
};

struct ArrowCounts {
    int aplus = 0;
    int aminus = 0;
    bool operator==(const ArrowCounts&) const = default;
};

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);
std::optional<Family> family_from_letter(char c);

struct DynkinClass {
    Family family = Family::A;
    int rank = 0;
    // relabel[x-1] is the canonical vertex assigned to input vertex x.
    std::vector<int> relabel;

    bool operator==(const DynkinClass&) const = default;
};

ValuedQuiver opposite(const ValuedQuiver& q);
ValuedGraph underlying_graph(const ValuedQuiver& q);

// Throws Error(NotATree) unless the underlying graph is a connected tree.
Walk reduced_walk(const ValuedQuiver& q, int x, int y);
ArrowCounts arrow_counts(const ValuedQuiver& q, int x, int y);

// All-pairs walk data for a tree quiver, computed once.
class TreeWalks {
public:
    explicit TreeWalks(const ValuedQuiver& q);

    int n() const { return n_; }
    const ArrowCounts& counts(int x, int y) const { return counts_[idx(x, y)]; }
    int aplus(int x, int y) const { return counts(x, y).aplus; }
    int aminus(int x, int y) const { return counts(x, y).aminus; }
    int length(int x, int y) const { return counts(x, y).aplus + counts(x, y).aminus; }
    Walk walk(int x, int y) const;

private:
    size_t idx(int x, int y) const { return static_cast<size_t>((x - 1) * n_ + (y - 1)); }
    int n_ = 0;
    std::vector<ArrowCounts> counts_;
    // parent_[root][v]: arrow step taken into v on the walk from root.
    std::vector<std::vector<std::pair<int, Step>>> parent_;
};

bool is_tree(const ValuedGraph& g);

std::optional<DynkinClass> classify_dynkin(const ValuedGraph& g);

// Literal encoding of the canonical diagram; throws Error(NotDynkin) for an unsupported pair.
ValuedGraph canonical_graph(Family f, int rank);
bool canonical_exists(Family f, int rank);

// Orients every edge of a graph: forward[e] keeps edges()[e] as x->y, otherwise y->x.
ValuedQuiver orient(const ValuedGraph& g, const std::vector<bool>& forward);

// Renames vertices: vertex x of q becomes perm[x-1].
ValuedQuiver relabel_quiver(const ValuedQuiver& q, const std::vector<int>& perm);

std::string to_string(const DynkinClass& d);

}  // namespace arq
