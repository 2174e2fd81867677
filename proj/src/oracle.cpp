#include "arq/oracle.hpp"

#include <functional>
#include <set>

#include "arq/coxeter.hpp"
#include "arq/dag.hpp"
#include "arq/derived.hpp"
#include "arq/error.hpp"
#include "checked.hpp"

namespace arq {

using detail::checked_add;
using detail::checked_mul;

bool OracleReport::ok() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

void OracleReport::add(std::string name, bool pass, std::string where) {
    checks.push_back({std::move(name), pass, std::move(where)});
}

void OracleReport::merge(const OracleReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

namespace {

std::string pos_text(ZVertex v) {
    return "(" + std::to_string(v.level) + "," + std::to_string(v.base) + ")";
}

std::vector<int> quiver_topo(const ValuedQuiver& q) {
    std::vector<std::vector<int>> out(static_cast<size_t>(q.n()));
    for (const Arrow& a : q.arrows()) out[static_cast<size_t>(a.src - 1)].push_back(a.dst - 1);
    return topological_order(out);
}

void add_scaled(DimVector& acc, long long c, const DimVector& v) {
    for (size_t k = 0; k < acc.size(); ++k) acc[k] = checked_add(acc[k], checked_mul(c, v[k]));
}

}  // namespace

std::vector<DimVector> recursive_projective_dims(const ValuedQuiver& q) {
    const size_t n = static_cast<size_t>(q.n());
    std::vector<DimVector> p(n, DimVector(n, 0));
    const auto topo = quiver_topo(q);
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        const int i = *it + 1;
        DimVector& d = p[static_cast<size_t>(i - 1)];
        d[static_cast<size_t>(i - 1)] = 1;
        for (int id : q.out_arrows(i)) {
            const Arrow& a = q.arrow(id);
            add_scaled(d, a.val.a, p[static_cast<size_t>(a.dst - 1)]);
        }
    }
    return p;
}

std::vector<DimVector> recursive_injective_dims(const ValuedQuiver& q) {
    const size_t n = static_cast<size_t>(q.n());
    std::vector<DimVector> inj(n, DimVector(n, 0));
    for (int v : quiver_topo(q)) {
        const int l = v + 1;
        DimVector& d = inj[static_cast<size_t>(l - 1)];
        d[static_cast<size_t>(l - 1)] = 1;
        for (int id : q.in_arrows(l)) {
            const Arrow& a = q.arrow(id);
            add_scaled(d, a.val.b, inj[static_cast<size_t>(a.src - 1)]);
        }
    }
    return inj;
}

OracleReport verify_mesh(const ARQuiver& arq) {
    OracleReport rep;
    const int n = arq.n();

    std::string mesh_fail;
    for (const ZVertex& v : arq.vertices) {
        if (v.level == 0) continue;
        DimVector lhs = arq.dims.at(v);
        add_scaled(lhs, 1, arq.dims.at(tau(v)));
        DimVector rhs(static_cast<size_t>(n), 0);
        bool inside = true;
        for (const ZArrow& a : arrows_in(arq.qop, v)) {
            if (!arq.contains(a.src)) {
                inside = false;
                break;
            }
            add_scaled(rhs, a.val.b, arq.dims.at(a.src));
        }
        if (!inside || lhs != rhs) {
            mesh_fail = pos_text(v);
            break;
        }
    }
    rep.add("mesh_additivity", mesh_fail.empty(), mesh_fail);

    const auto proj = recursive_projective_dims(arq.q);
    const auto inj = recursive_injective_dims(arq.q);
    std::string pfail, ifail;
    for (int i = 1; i <= n && pfail.empty(); ++i)
        if (arq.dims.at(arq.projective(i)) != proj[static_cast<size_t>(i - 1)]) pfail = "P_" + std::to_string(i);
    for (int i = 1; i <= n && ifail.empty(); ++i)
        if (arq.dims.at(arq.injective(i)) != inj[static_cast<size_t>(i - 1)]) ifail = "I_" + std::to_string(i);
    rep.add("projective_recursion", pfail.empty(), pfail);
    rep.add("injective_recursion", ifail.empty(), ifail);

    std::string sign_fail;
    std::set<DimVector> seen;
    bool distinct = true;
    for (const auto& [v, d] : arq.dims) {
        bool nonzero = false, nonneg = true;
        for (long long x : d) {
            nonzero = nonzero || x != 0;
            nonneg = nonneg && x >= 0;
        }
        if (sign_fail.empty() && (!nonzero || !nonneg)) sign_fail = pos_text(v);
        distinct = seen.insert(d).second && distinct;
    }
    rep.add("dims_nonnegative_nonzero", sign_fail.empty(), sign_fail);
    rep.add("dims_distinct", distinct, distinct ? "" : "repeated dimension vector");
    return rep;
}

OracleReport audit_paths(const ARQuiver& arq) {
    OracleReport rep;
    const auto out = adjacency(arq);
    const auto topo = topological_order(out);
    const size_t nv = out.size();
    std::vector<std::vector<int>> in(nv);
    for (size_t u = 0; u < nv; ++u)
        for (int v : out[u]) in[static_cast<size_t>(v)].push_back(static_cast<int>(u));

    std::string len_fail, sec_fail;
    int longest = 0;
    for (size_t src = 0; src < nv; ++src) {
        const auto stats = paths_from(out, topo, static_cast<int>(src));
        // sec[v][j]: sectional paths from src to v whose last arrow comes from in[v][j].
        std::vector<std::vector<std::uint64_t>> sec(nv);
        for (size_t v = 0; v < nv; ++v) sec[v].assign(in[v].size(), 0);
        for (int vi : topo) {
            const size_t v = static_cast<size_t>(vi);
            const ZVertex tv = tau(arq.vertices[v]);
            for (size_t j = 0; j < in[v].size(); ++j) {
                const size_t u = static_cast<size_t>(in[v][j]);
                std::uint64_t total = u == src ? 1 : 0;
                for (size_t w = 0; w < in[u].size(); ++w)
                    if (arq.vertices[static_cast<size_t>(in[u][w])] != tv) total += sec[u][w];
                sec[v][j] = total;
            }
        }
        for (size_t v = 0; v < nv; ++v) {
            const PathStats& s = stats[v];
            if (!s.reachable) continue;
            longest = std::max(longest, s.max_len);
            if (s.min_len != s.max_len && len_fail.empty())
                len_fail = pos_text(arq.vertices[src]) + " ~> " + pos_text(arq.vertices[v]);
            std::uint64_t sectional = v == src ? 1 : 0;
            for (std::uint64_t c : sec[v]) sectional += c;
            if (sectional > 0 && (sectional != 1 || s.count != 1) && sec_fail.empty())
                sec_fail = pos_text(arq.vertices[src]) + " ~> " + pos_text(arq.vertices[v]);
        }
    }
    rep.add("parallel_paths_equal_length", len_fail.empty(), len_fail);
    rep.add("sectional_paths_unique", sec_fail.empty(), sec_fail);
    return rep;
}

OracleReport run_all_checks(const ValuedQuiver& q) {
    OracleReport rep;
    auto guarded = [&](const std::string& name, const std::function<bool()>& fn) {
        try {
            rep.add(name, fn());
        } catch (const Error& e) {
            rep.add(name, false, e.what());
        }
    };
    ARQuiver arq;
    try {
        arq = build(q);
        rep.add("build", true);
    } catch (const Error& e) {
        rep.add("build", false, e.what());
        return rep;
    }
    rep.merge(verify_mesh(arq));
    rep.merge(audit_paths(arq));
    guarded("closed_form_matches_knit", [&] { return closed_form_rho_m(q) == RhoM{arq.m, arq.rho}; });
    guarded("rho_involution", [&] {
        for (int i = 1; i <= arq.n(); ++i)
            if (arq.rho_of(arq.rho_of(i)) != i) return false;
        return true;
    });
    guarded("pi_index_relation", [&] { return pi_index_relation_check(arq); });
    guarded("hammock_endpoints", [&] {
        for (int k = 1; k <= arq.n(); ++k) {
            const auto& h = arq.hammocks[static_cast<size_t>(k - 1)];
            if (composition_multiplicity(h, arq.projective(k)) != 1) return false;
            if (composition_multiplicity(h, arq.injective(k)) != 1) return false;
        }
        return true;
    });
    CoxeterData cd;
    try {
        cd = coxeter_matrix(arq);
        rep.add("coxeter_matrix", true);
    } catch (const Error& e) {
        rep.add("coxeter_matrix", false, e.what());
        return rep;
    }
    guarded("coxeter_relation", [&] {
        IntMatrix lhs = multiply(cd.cox, cd.cartan);
        for (auto& row : lhs)
            for (auto& x : row) x = -x;
        return lhs == cd.inj;
    });
    guarded("order_identity", [&] { return order_identity_check(arq, cd); });
    guarded("counts_and_nilpotency", [&] {
        Counts c = counts_and_nilpotency(arq, cd.order);
        return c.nilpotency == cd.order - 1;
    });
    guarded("derived_dims", [&] {
        std::vector<DerivedSample> samples;
        for (const ZVertex& v : arq.vertices)
            for (int s = -1; s <= 1; ++s)
                for (int t : {-cd.order, -1, 1, 2, cd.order}) samples.push_back({v, s, t});
        return derived_dim_check(arq, cd, samples);
    });
    guarded("derived_period", [&] {
        const DerivedModel model(arq, cd.order);
        for (int i = 1; i <= arq.n(); ++i)
            if (model.tau_d_power({0, i, 0}, -cd.order) != DerivedVertex{0, i, 2}) return false;
        return true;
    });
    guarded("derived_nilpotency", [&] { return derived_nilpotency(arq, cd) == cd.order - 1; });
    guarded("cluster_counts", [&] {
        return 2 * cluster_counts(arq, cd) == static_cast<long long>(arq.n()) * (cd.order + 2);
    });
    return rep;
}

}  // namespace arq
