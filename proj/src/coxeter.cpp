#include "arq/coxeter.hpp"

#include "arq/dag.hpp"
#include "arq/derived.hpp"
#include "arq/error.hpp"
#include "checked.hpp"

namespace arq {

using detail::checked_add;
using detail::checked_mul;
using detail::checked_sub;

namespace {

constexpr int kOrderBound = 60;  // twice the largest table value

}  // namespace

IntMatrix identity_matrix(int n) {
    IntMatrix x(static_cast<size_t>(n), std::vector<long long>(static_cast<size_t>(n), 0));
    for (size_t i = 0; i < x.size(); ++i) x[i][i] = 1;
    return x;
}

IntMatrix multiply(const IntMatrix& x, const IntMatrix& y) {
    const size_t n = x.size();
    IntMatrix z(n, std::vector<long long>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (x[i][k] == 0) continue;
            for (size_t j = 0; j < n; ++j) z[i][j] = checked_add(z[i][j], checked_mul(x[i][k], y[k][j]));
        }
    return z;
}

DimVector apply(const IntMatrix& x, const DimVector& v) {
    DimVector out(x.size(), 0);
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) out[i] = checked_add(out[i], checked_mul(x[i][j], v[j]));
    return out;
}

int table_order(Family f, int rank) {
    switch (f) {
        case Family::A: return rank + 1;
        case Family::B:
        case Family::C: return 2 * rank;
        case Family::D: return 2 * (rank - 1);
        case Family::E: return rank == 6 ? 12 : rank == 7 ? 18 : 30;
        case Family::F: return 12;
        case Family::G: return 6;
    }
    return 0;
}

CoxeterData coxeter_matrix(const ARQuiver& arq) {
    const int n = arq.n();
    const size_t un = static_cast<size_t>(n);
    CoxeterData cd;
    cd.cartan = identity_matrix(n);
    cd.inj = identity_matrix(n);
    for (int i = 1; i <= n; ++i) {
        const DimVector& p = arq.dims.at(arq.projective(i));
        const DimVector& e = arq.dims.at(arq.injective(i));
        for (size_t k = 0; k < un; ++k) {
            cd.cartan[k][static_cast<size_t>(i - 1)] = p[k];
            cd.inj[k][static_cast<size_t>(i - 1)] = e[k];
        }
    }

    // Topological order of Q makes the Cartan matrix lower unitriangular.
    std::vector<std::vector<int>> out(un);
    for (const Arrow& a : arq.q.arrows()) out[static_cast<size_t>(a.src - 1)].push_back(a.dst - 1);
    const std::vector<int> topo = topological_order(out);
    std::vector<size_t> pos(un);
    for (size_t t = 0; t < un; ++t) pos[static_cast<size_t>(topo[t])] = t;
    for (size_t r = 0; r < un; ++r)
        for (size_t c = 0; c < un; ++c) {
            const long long want_diag = r == c ? 1 : 0;
            if ((r == c && cd.cartan[r][c] != want_diag) || (r != c && pos[c] > pos[r] && cd.cartan[r][c] != 0))
                throw Error(ErrorKind::SingularCartan, "Cartan matrix is not unitriangular in topological order");
        }

    // Forward substitution: cartan * inv = I.
    IntMatrix inv(un, std::vector<long long>(un, 0));
    for (size_t col = 0; col < un; ++col)
        for (size_t t = 0; t < un; ++t) {
            const size_t row = static_cast<size_t>(topo[t]);
            long long x = row == col ? 1 : 0;
            for (size_t u = 0; u < t; ++u) {
                const size_t c = static_cast<size_t>(topo[u]);
                x = checked_sub(x, checked_mul(cd.cartan[row][c], inv[c][col]));
            }
            inv[row][col] = x;
        }
    if (multiply(cd.cartan, inv) != identity_matrix(n))
        throw Error(ErrorKind::SingularCartan, "Cartan inverse check failed");

    cd.cox = multiply(cd.inj, inv);
    for (auto& row : cd.cox)
        for (auto& x : row) x = -x;

    const IntMatrix id = identity_matrix(n);
    IntMatrix power = cd.cox;
    for (int t = 1; t <= kOrderBound; ++t) {
        if (power == id) {
            cd.order = t;
            return cd;
        }
        power = multiply(power, cd.cox);
    }
    throw Error(ErrorKind::OrderBoundExceeded, "Coxeter matrix has no order up to " + std::to_string(kOrderBound));
}

IntMatrix coxeter_power(const CoxeterData& cd, int t) {
    const int n = static_cast<int>(cd.cox.size());
    int e = t % cd.order;
    if (e < 0) e += cd.order;
    IntMatrix out = identity_matrix(n);
    for (int j = 0; j < e; ++j) out = multiply(out, cd.cox);
    return out;
}

bool order_identity_check(const ARQuiver& arq, const CoxeterData& cd) {
    if (cd.order != table_order(arq.dynkin.family, arq.dynkin.rank)) return false;
    for (int i = 1; i <= arq.n(); ++i)
        if (arq.m_of(i) + arq.m_of(arq.rho_of(i)) + 2 != cd.order) return false;
    return true;
}

bool derived_dim_check(const ARQuiver& arq, const CoxeterData& cd, const std::vector<DerivedSample>& samples) {
    const DerivedModel model(arq, cd.order);
    for (const DerivedSample& s : samples) {
        const DerivedVertex v{s.pos.level, s.pos.base, s.shift};
        const DerivedVertex w = model.tau_d_power(v, s.t);
        if (model.dim(w) != arq::apply(coxeter_power(cd, s.t), model.dim(v))) return false;
    }
    return true;
}

}  // namespace arq
