#pragma once

#include <array>

#include "ssw/state.hpp"
#include "ssw/vec6.hpp"

namespace ssw {

// Exact fluxes of the conservative part.
Vec6 flux_x(const ConservedState& u);
Vec6 flux_y(const ConservedState& u);

// Non-conservative gravity vectors B^x, B^y (multiply the depth gradient).
Vec6 noncons_x(const ConservedState& u, double g);
Vec6 noncons_y(const ConservedState& u, double g);

// alpha = max(0, C_r (T - phi h^2) / T^2), T = trace(P).
double alpha_closure(const PrimitiveState& w, const ModelParams& p);

// Source vector S: topography, Chezy friction and stress dissipation.
Vec6 source(const ConservedState& u, double db_dx, double db_dy, const ModelParams& p);

// Full-system eigenvalues in ascending order:
// v_d -+ sqrt(g h + 3 P_dd), v_d -+ sqrt(P_dd), v_d, v_d.
std::array<double, 6> eigenvalues_x(const PrimitiveState& w, double g);
std::array<double, 6> eigenvalues_y(const PrimitiveState& w, double g);

// Speed scale of the Rusanov-type diffusion coefficient, |v_d| + sqrt(P_dd).
// The full fast-family speed |v_d| + sqrt(g h + 3 P_dd) is a valid upper
// bound but over-damps smooth solutions by a constant factor; the
// intermediate-family scale keeps the schemes entropy stable (any positive
// coefficient does) while matching the accuracy of the reference results.
inline double diffusion_speed_x(const PrimitiveState& w) {
    return std::abs(w.v1) + std::sqrt(w.P11);
}
inline double diffusion_speed_y(const PrimitiveState& w) {
    return std::abs(w.v2) + std::sqrt(w.P22);
}

// Largest absolute full-system wave speed, used for the CFL time step.
inline double max_speed_x(const PrimitiveState& w, double g) {
    return std::abs(w.v1) + std::sqrt(g * w.h + 3 * w.P11);
}
inline double max_speed_y(const PrimitiveState& w, double g) {
    return std::abs(w.v2) + std::sqrt(g * w.h + 3 * w.P22);
}

// Change-of-variable Jacobian dU/dW.
Mat6 jacobian_prim_to_cons(const PrimitiveState& w);

// Right eigenvectors of the conservative-part Jacobian dF^x/dU, in primitive
// variables. Columns are ordered by ascending eigenvalue
// v1 - sqrt(3 P11), v1 - sqrt(P11), v1, v1, v1 + sqrt(P11), v1 + sqrt(3 P11).
Mat6 right_eigenvectors_prim_x(const PrimitiveState& w);

// Same in conserved variables: R^x = (dU/dW) R_W^x.
Mat6 right_eigenvectors_x(const PrimitiveState& w);
Mat6 right_eigenvectors_y(const PrimitiveState& w);

// Eigenvalues of the conservative-part Jacobian dF^x/dU (ascending), matching
// the columns of right_eigenvectors_x.
std::array<double, 6> conservative_eigenvalues_x(const PrimitiveState& w);

}  // namespace ssw
