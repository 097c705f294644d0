#pragma once

#include "trinom/params.hpp"
#include "trinom/types.hpp"

#include <set>
#include <string>

namespace trinom {

// Type labels are opaque ASCII tags as printed in multiplets:
// "beta", "beta_1", "beta_2", "gamma", "eps".
struct DpfReport {
    TrinomialParams params;
    bool theta_is_dpf = false;
    bool trivial = false;  // b = 1, theta is a unit
    Integer theta_norm;
    Integer theta_sq_norm;
    bool dpf_norms_divide_f_squared = false;
    std::set<std::string> forced_types;
};

// PreconditionError unless the member is monogenic.
DpfReport dpf_report(const TrinomialParams& params);

// b is free of d-th powers.
bool primitivity_check(const TrinomialParams& params);

}  // namespace trinom
