#pragma once

#include <vector>

#include "arq/ar_quiver.hpp"
#include "arq/quiver.hpp"

namespace arq {

using IntMatrix = std::vector<std::vector<long long>>;  // row-major, square

IntMatrix identity_matrix(int n);
// Throw Error(Overflow).
IntMatrix multiply(const IntMatrix& x, const IntMatrix& y);
DimVector apply(const IntMatrix& x, const DimVector& v);

struct CoxeterData {
    IntMatrix cartan;  // column i is dim P_i
    IntMatrix inj;     // column i is dim I_i
    IntMatrix cox;     // cox * cartan = -inj
    int order = 0;
};

int table_order(Family f, int rank);

// Throws Error(SingularCartan | OrderBoundExceeded | Overflow).
CoxeterData coxeter_matrix(const ARQuiver& arq);

// C^t for any integer t.
IntMatrix coxeter_power(const CoxeterData& cd, int t);

bool order_identity_check(const ARQuiver& arq, const CoxeterData& cd);

struct DerivedSample {
    ZVertex pos;
    int shift = 0;
    int t = 0;  // power of tau_D
};

bool derived_dim_check(const ARQuiver& arq, const CoxeterData& cd, const std::vector<DerivedSample>& samples);

}  // namespace arq
