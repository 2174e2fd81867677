#pragma once

#include <compare>
#include <optional>

#include "arq/ar_quiver.hpp"
#include "arq/coxeter.hpp"

namespace arq {

// Stalk complex (tau^{-r} P_i)[s].
struct DerivedVertex {
    int r = 0;
    int i = 0;
    int s = 0;

    auto operator<=>(const DerivedVertex&) const = default;
};

struct ClusterRep {
    DerivedVertex rep;
    int power = 0;  // F^power(rep) is the input

    bool operator==(const ClusterRep&) const = default;
};

// Coordinate model of the derived AR quiver, identified with the repetitive quiver of Q^op.
class DerivedModel {
public:
    // Throws Error(CrossCheckFailed) unless m(i) + m(rho(i)) + 2 = order for all i.
    DerivedModel(const ARQuiver& arq, int order);

    int order() const { return order_; }
    bool valid(DerivedVertex v) const { return arq_.contains({v.r, v.i}); }

    // Throw Error(PositionOutOfRange) on invalid input.
    DerivedVertex tau_d_inverse(DerivedVertex v) const;
    DerivedVertex tau_d(DerivedVertex v) const;
    DerivedVertex tau_d_power(DerivedVertex v, int t) const;  // tau_D^t

    ZVertex to_global(DerivedVertex v) const;
    DerivedVertex from_global(ZVertex z) const;

    // Signed dimension vector: dim M[s] = (-1)^s dim M.
    DimVector dim(DerivedVertex v) const;

    std::optional<int> distance(DerivedVertex a, DerivedVertex b) const;

    // F = tau_D^{-1} o [1].
    DerivedVertex cluster_f(DerivedVertex v) const;
    DerivedVertex cluster_f_inverse(DerivedVertex v) const;
    ClusterRep cluster_normalize(DerivedVertex v) const;
    static bool in_fundamental_domain(DerivedVertex v) { return v.s == 0 || (v.s == 1 && v.r == 0); }

private:
    void check(DerivedVertex v) const;

    const ARQuiver& arq_;
    int order_;
};

// Throw Error(CrossCheckFailed).
int derived_nilpotency(const ARQuiver& arq, const CoxeterData& cd);
long long cluster_counts(const ARQuiver& arq, const CoxeterData& cd);
int cluster_nilpotency(const ARQuiver& arq, const CoxeterData& cd);

}  // namespace arq
