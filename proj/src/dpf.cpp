#include "trinom/dpf.hpp"

#include "trinom/invariants.hpp"
#include "trinom/numeric.hpp"
#include "trinom/order.hpp"

namespace trinom {

DpfReport dpf_report(const TrinomialParams& params) {
    if (!params.is_cubic()) throw PreconditionError("dpf_report: cubic family only");
    const MonogeneityReport mono = monogeneity_test(params);
    if (!mono.monogenic) throw PreconditionError("dpf_report: " + params.describe() + " is not monogenic: " + mono.diagnostics());

    const IntElement theta = IntElement::theta(params);
    DpfReport out{params, false, params.b() == 1, {}, {}, false, {}};
    out.theta_norm = norm(theta);
    out.theta_sq_norm = norm(theta * theta);
    out.theta_is_dpf = is_ambiguous_principal_generator(theta) && principal_ideal_absorption_check(params);

    const FieldInvariants inv = compute_invariants(params);
    const Integer n2 = out.theta_sq_norm;
    out.dpf_norms_divide_f_squared = (inv.f * inv.f) % n2 == 0;

    if (params.sigma() < 0) {
        out.forced_types = {"beta_1", "beta_2", "gamma", "eps"};
    } else if (!out.trivial) {
        out.forced_types = {"beta"};
    }
    return out;
}

bool primitivity_check(const TrinomialParams& params) { return is_power_free(params.b(), params.degree()); }

}  // namespace trinom
