#pragma once

#include <utility>
#include <vector>

#include "arq/quiver.hpp"
#include "arq/repetitive.hpp"

namespace arq {

struct HammockResult {
    int k = 0;
    // Values of h_k on the explored part of Suc(0,k) in the repetitive quiver of Q^op.
    ZFunction table;
    ZVertex terminator;  // (s_k, i_k), value -1
    int m_of = 0;        // m(i_k) = s_k - 1
    std::pair<int, int> rho_pair;  // (i_k, k): rho(i_k) = k
    // Suc(0,k) intersected with Pred(s_k - 1, i_k), sorted.
    std::vector<ZVertex> hull;
};

// Values on the (0,k)-source section: running products of second valuation components.
ZFunction seed_section(const ValuedQuiver& qop, int k);

// Throws Error(NotATree | KnitInconsistent | BoundExceeded | DanglingVertexIndex).
HammockResult knit_hammock(const ValuedQuiver& q, int k);

// Positions inside the hull with positive value.
std::vector<ZVertex> hammock_vertices(const HammockResult& res);

// Multiplicity of S_k in the module at pos; 0 outside the hull. Throws Error(PositionOutOfRange).
long long composition_multiplicity(const HammockResult& res, ZVertex pos);

// Full subquiver of the repetitive quiver induced on the hammock vertices.
struct InducedSubquiver {
    std::vector<ZVertex> vertices;
    std::vector<ZArrow> arrows;
    bool induced = true;
};

InducedSubquiver hammock_subquiver(const ValuedQuiver& q, const HammockResult& res);

}  // namespace arq
