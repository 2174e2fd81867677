#pragma once

#include <map>
#include <optional>
#include <vector>

#include "arq/hammock.hpp"
#include "arq/quiver.hpp"
#include "arq/repetitive.hpp"

namespace arq {

using DimVector = std::vector<long long>;

// Auslander-Reiten quiver embedded in the repetitive quiver of Q^op.
// Vertex (r,i) stands for tau^{-r} P_i.
struct ARQuiver {
    ValuedQuiver q;
    ValuedQuiver qop;
    DynkinClass dynkin;
    std::vector<int> m;    // m[i-1]
    std::vector<int> rho;  // rho[i-1]
    std::vector<ZVertex> vertices;  // sorted by (level, base)
    std::vector<ZArrow> arrows;
    std::map<ZVertex, DimVector> dims;
    std::vector<HammockResult> hammocks;  // hammocks[k-1]

    int n() const { return q.n(); }
    int m_of(int i) const { return m[static_cast<size_t>(i - 1)]; }
    int rho_of(int i) const { return rho[static_cast<size_t>(i - 1)]; }
    bool contains(ZVertex v) const { return v.base >= 1 && v.base <= n() && v.level >= 0 && v.level <= m_of(v.base); }
    ZVertex projective(int i) const { return {0, i}; }
    // I_i sits at (m(j), j) with rho(j) = i.
    ZVertex injective(int i) const { return {m_of(rho_of(i)), rho_of(i)}; }
    int index_of(ZVertex v) const;
};

struct RhoM {
    std::vector<int> m;
    std::vector<int> rho;
    bool operator==(const RhoM&) const = default;
};

// Throws Error(NotDynkin), or propagates hammock errors.
ARQuiver build(const ValuedQuiver& q);

RhoM closed_form_rho_m(const ValuedQuiver& q);

// Throws Error(PositionOutOfRange).
DimVector dim_vector(const ARQuiver& arq, ZVertex pos);

// Common length of all paths a ~> b; throws Error(CrossCheckFailed) if they differ.
std::optional<int> distance(const ARQuiver& arq, ZVertex a, ZVertex b);

// Path lengths from a to every reachable vertex, indexed like arq.vertices (-1 when unreachable).
std::vector<int> distances_from(const ARQuiver& arq, ZVertex a);

struct Counts {
    long long indecomposables = 0;
    int nilpotency = 0;
};

// Throws Error(CrossCheckFailed).
Counts counts_and_nilpotency(const ARQuiver& arq, int order);

bool pi_index_relation_check(const ARQuiver& arq);

// Adjacency lists of the AR quiver over indices into arq.vertices.
std::vector<std::vector<int>> adjacency(const ARQuiver& arq);

}  // namespace arq
