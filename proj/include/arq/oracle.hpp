#pragma once

#include <string>
#include <vector>

#include "arq/ar_quiver.hpp"

namespace arq {

struct OracleCheck {
    std::string name;
    bool pass = true;
    std::string where;  // first failure, empty on pass
};

struct OracleReport {
    std::vector<OracleCheck> checks;

    bool ok() const;
    void add(std::string name, bool pass, std::string where = {});
    void merge(const OracleReport& other);
};

// dim P_i = e_i + sum over arrows i->j of d_ij dim P_j; indexed by i-1.
std::vector<DimVector> recursive_projective_dims(const ValuedQuiver& q);
// dim I_l = e_l + sum over arrows j->l of d'_jl dim I_j; indexed by l-1.
std::vector<DimVector> recursive_injective_dims(const ValuedQuiver& q);

OracleReport verify_mesh(const ARQuiver& arq);
OracleReport audit_paths(const ARQuiver& arq);

// Every check the library offers for one quiver; never throws on internal inconsistency.
OracleReport run_all_checks(const ValuedQuiver& q);

}  // namespace arq
