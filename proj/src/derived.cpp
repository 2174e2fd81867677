#include "arq/derived.hpp"

#include <algorithm>
#include <set>

#include "arq/error.hpp"

namespace arq {

namespace {

int floor_div(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::string text(DerivedVertex v) {
    return "(" + std::to_string(v.r) + "," + std::to_string(v.i) + "," + std::to_string(v.s) + ")";
}

}  // namespace

DerivedModel::DerivedModel(const ARQuiver& arq, int order) : arq_(arq), order_(order) {
    for (int i = 1; i <= arq.n(); ++i)
        if (arq.m_of(i) + arq.m_of(arq.rho_of(i)) + 2 != order)
            throw Error(ErrorKind::CrossCheckFailed, "m(i) + m(rho(i)) + 2 differs from |C| at i = " + std::to_string(i));
}

void DerivedModel::check(DerivedVertex v) const {
    if (!valid(v)) throw Error(ErrorKind::PositionOutOfRange, text(v) + " is not a stalk vertex");
}

DerivedVertex DerivedModel::tau_d_inverse(DerivedVertex v) const {
    check(v);
    if (v.r < arq_.m_of(v.i)) return {v.r + 1, v.i, v.s};
    return {0, arq_.rho_of(v.i), v.s + 1};
}

DerivedVertex DerivedModel::tau_d(DerivedVertex v) const {
    check(v);
    if (v.r > 0) return {v.r - 1, v.i, v.s};
    const int j = arq_.rho_of(v.i);
    return {arq_.m_of(j), j, v.s - 1};
}

DerivedVertex DerivedModel::tau_d_power(DerivedVertex v, int t) const {
    for (; t > 0; --t) v = tau_d(v);
    for (; t < 0; ++t) v = tau_d_inverse(v);
    check(v);
    return v;
}

ZVertex DerivedModel::to_global(DerivedVertex v) const {
    check(v);
    const int k = floor_div(v.s, 2);
    if (v.s - 2 * k == 0) return {v.r + k * order_, v.i};
    const int j = arq_.rho_of(v.i);
    return {v.r + k * order_ + arq_.m_of(j) + 1, j};
}

DerivedVertex DerivedModel::from_global(ZVertex z) const {
    if (z.base < 1 || z.base > arq_.n()) throw Error(ErrorKind::PositionOutOfRange, "base vertex out of range");
    const int k = floor_div(z.level, order_);
    const int rem = z.level - k * order_;
    if (rem <= arq_.m_of(z.base)) return {rem, z.base, 2 * k};
    return {rem - arq_.m_of(z.base) - 1, arq_.rho_of(z.base), 2 * k + 1};
}

DimVector DerivedModel::dim(DerivedVertex v) const {
    check(v);
    DimVector d = arq_.dims.at({v.r, v.i});
    if (v.s % 2 != 0)
        for (auto& x : d) x = -x;
    return d;
}

std::optional<int> DerivedModel::distance(DerivedVertex a, DerivedVertex b) const {
    return z_distance(arq_.qop, to_global(a), to_global(b));
}

DerivedVertex DerivedModel::cluster_f(DerivedVertex v) const {
    v.s += 1;
    return tau_d_inverse(v);
}

DerivedVertex DerivedModel::cluster_f_inverse(DerivedVertex v) const {
    v = tau_d(v);
    v.s -= 1;
    return v;
}

ClusterRep DerivedModel::cluster_normalize(DerivedVertex v) const {
    check(v);
    ClusterRep c{v, 0};
    while (c.rep.s >= 2 || (c.rep.s == 1 && c.rep.r > 0)) {
        c.rep = cluster_f_inverse(c.rep);
        ++c.power;
    }
    while (c.rep.s < 0) {
        c.rep = cluster_f(c.rep);
        --c.power;
    }
    if (!in_fundamental_domain(c.rep))
        throw Error(ErrorKind::CrossCheckFailed, "normalization left the fundamental domain at " + text(c.rep));
    return c;
}

int derived_nilpotency(const ARQuiver& arq, const CoxeterData& cd) {
    const DerivedModel model(arq, cd.order);
    int max_level = 0;
    for (int i = 1; i <= arq.n(); ++i) max_level = std::max(max_level, arq.m_of(i));
    // Hom(P_k, N) != 0 exactly when S_k is a composition factor of N; such pairs are at
    // distance at most |C| - 2, attained at N = I_k.
    int longest = 0;
    for (int k = 1; k <= arq.n(); ++k) {
        const auto dist = z_distances_from(arq.qop, model.to_global({0, k, 0}), max_level);
        for (const ZVertex& b : arq.vertices) {
            if (arq.dims.at(b)[static_cast<size_t>(k - 1)] == 0) continue;
            auto it = dist.find(model.to_global({b.level, b.base, 0}));
            if (it == dist.end())
                throw Error(ErrorKind::CrossCheckFailed, "no path from P_k to a module with S_k as a factor");
            longest = std::max(longest, it->second);
        }
    }
    if (longest != cd.order - 2)
        throw Error(ErrorKind::CrossCheckFailed, "longest nonzero-Hom distance from a projective is " + std::to_string(longest));
    // With a single vertex the repetitive quiver has no arrows and every radical is zero.
    for (int i = 1; i <= arq.n() && arq.n() > 1; ++i) {
        const DerivedVertex p{0, i, 0};
        const ZVertex inj = arq.injective(i);
        const auto to_inj = model.distance(p, {inj.level, inj.base, 0});
        const auto to_shift = model.distance(p, {0, i, 1});
        if (!to_inj || !to_shift || *to_shift != *to_inj + 2)
            throw Error(ErrorKind::CrossCheckFailed, "dist(P_i[0], P_i[1]) differs from dist(P_i, I_i) + 2");
    }
    return cd.order - 1;
}

long long cluster_counts(const ARQuiver& arq, const CoxeterData& cd) {
    const DerivedModel model(arq, cd.order);
    const long long domain = static_cast<long long>(arq.vertices.size()) + arq.n();
    if (2 * domain != static_cast<long long>(arq.n()) * (cd.order + 2))
        throw Error(ErrorKind::CrossCheckFailed, "fundamental domain size differs from n(|C|+2)/2");
    std::set<DerivedVertex> reps;
    for (int s = -3; s <= 4; ++s)
        for (const ZVertex& v : arq.vertices) {
            const DerivedVertex d{v.level, v.base, s};
            const ClusterRep c = model.cluster_normalize(d);
            DerivedVertex back = c.rep;
            for (int p = 0; p < c.power; ++p) back = model.cluster_f(back);
            for (int p = 0; p > c.power; --p) back = model.cluster_f_inverse(back);
            if (back != d) throw Error(ErrorKind::CrossCheckFailed, "F^p(rep) does not return the input");
            reps.insert(c.rep);
        }
    if (static_cast<long long>(reps.size()) != domain)
        throw Error(ErrorKind::CrossCheckFailed, "orbit representatives do not fill the fundamental domain");
    return domain;
}

int cluster_nilpotency(const ARQuiver& arq, const CoxeterData& cd) {
    const int derived = derived_nilpotency(arq, cd);
    if (derived != cd.order - 1) throw Error(ErrorKind::CrossCheckFailed, "cluster nilpotency mismatch");
    return derived;
}

}  // namespace arq
