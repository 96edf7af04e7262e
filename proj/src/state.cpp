#include "ssw/state.hpp"

#include <cmath>

namespace ssw {

bool is_admissible(const PrimitiveState& w) {
    return w.h > kAdmissibilityFloor && w.P11 > kAdmissibilityFloor &&
           w.P22 > kAdmissibilityFloor && w.det_P() > kAdmissibilityFloor;
}

void require_admissible(const PrimitiveState& w) {
    if (!(w.h > kAdmissibilityFloor)) throw NonPositiveDepth(w.h);
    if (!(w.P11 > kAdmissibilityFloor)) throw NonPositiveStress("P11", w.P11);
    if (!(w.P22 > kAdmissibilityFloor)) throw NonPositiveStress("P22", w.P22);
    const double det = w.det_P();
    if (!(det > kAdmissibilityFloor)) throw NonPositiveStress("det P", det);
}

ConservedState prim_to_cons(const PrimitiveState& w) {
    return {w.h,
            w.h * w.v1,
            w.h * w.v2,
            0.5 * w.h * (w.v1 * w.v1 + w.P11),
            0.5 * w.h * (w.v1 * w.v2 + w.P12),
            0.5 * w.h * (w.v2 * w.v2 + w.P22)};
}

PrimitiveState cons_to_prim(const ConservedState& u) {
    if (!(u.h > kAdmissibilityFloor)) throw NonPositiveDepth(u.h);
    const double v1 = u.m1 / u.h;
    const double v2 = u.m2 / u.h;
    PrimitiveState w{u.h, v1, v2,
                     2 * u.E11 / u.h - v1 * v1,
                     2 * u.E12 / u.h - v1 * v2,
                     2 * u.E22 / u.h - v2 * v2};
    if (!(w.P11 > kAdmissibilityFloor)) throw NonPositiveStress("P11", w.P11);
    if (!(w.P22 > kAdmissibilityFloor)) throw NonPositiveStress("P22", w.P22);
    const double det = w.det_P();
    if (!(det > kAdmissibilityFloor)) throw NonPositiveStress("det P", det);
    return w;
}

EntropyPoint entropy(const ConservedState& u) {
    const PrimitiveState w = cons_to_prim(u);
    const double s = std::log(w.det_P() / (w.h * w.h));
    return {-w.h * s, s};
}

EntropyVars entropy_vars(const ConservedState& u) {
    const PrimitiveState w = cons_to_prim(u);
    const double D = w.det_P();
    const double s = std::log(D / (w.h * w.h));
    EntropyVars V;
    V[0] = 4 - s -
           (w.P11 * w.v2 * w.v2 + w.P22 * w.v1 * w.v1 - 2 * w.P12 * w.v1 * w.v2) / D;
    V[1] = 2 * (w.P22 * w.v1 - w.P12 * w.v2) / D;
    V[2] = 2 * (w.P11 * w.v2 - w.P12 * w.v1) / D;
    V[3] = -2 * w.P22 / D;
    V[4] = 4 * w.P12 / D;
    V[5] = -2 * w.P11 / D;
    return V;
}

ConservedState cons_from_entropy_vars(const Vec6& V) {
    // With a = P22/detP, b = P12/detP, c = P11/detP:
    //   V = (..., 2(a v1 - b v2), 2(c v2 - b v1), -2a, 4b, -2c).
    const double a = -V[3] / 2;
    const double b = V[4] / 4;
    const double c = -V[5] / 2;
    const double det = a * c - b * b;
    if (!(a > 0 && c > 0 && det > 0))
        throw AdmissibilityError("entropy variables outside the admissible range");
    const double D = 1.0 / det;  // det P
    const PrimitiveState stress{0, 0, 0, c * D, b * D, a * D};
    const double v1 = (c * V[1] + b * V[2]) / (2 * det);
    const double v2 = (b * V[1] + a * V[2]) / (2 * det);
    const double quad = (stress.P11 * v2 * v2 + stress.P22 * v1 * v1 -
                         2 * stress.P12 * v1 * v2) / D;
    const double s = 4 - V[0] - quad;
    const double h = std::sqrt(D * std::exp(-s));
    return prim_to_cons({h, v1, v2, stress.P11, stress.P12, stress.P22});
}

EntropyPotential entropy_potential(const ConservedState& u) {
    return {2 * u.m1, 2 * u.m2};
}

}  // namespace ssw
