#pragma once

#include <span>

#include "ssw/physics.hpp"
#include "ssw/state.hpp"
#include "ssw/vec6.hpp"

namespace ssw {

// Barth scaling matrix T^x with (T^x)^2 = Y^x; block diagonal with one 2x2 block.
Mat6 scaling_matrix_x(const PrimitiveState& w);
Mat6 scaling_matrix_y(const PrimitiveState& w);

struct ScaledEigen {
    Mat6 R_tilde;   // R T, satisfies R~ R~^T = dU/dV
    Mat6 T;
    double lambda;  // Rusanov speed: max full-system |eigenvalue|
};

ScaledEigen scaled_eigensystem_x(const PrimitiveState& w, double g);
ScaledEigen scaled_eigensystem_y(const PrimitiveState& w, double g);

// Entropy stable interface flux in the x-direction.
// The stencil holds 2*reconstruction_width(order) cells centered on the face.
// Dissipation is evaluated at the arithmetic average of the two adjacent
// primitive states and applied as R~ Lambda [[R~^T V]] with reconstructed jumps.
Vec6 es_flux_x(std::span<const ConservedState> stencil, int order, double g);
Vec6 es_flux_y(std::span<const ConservedState> stencil, int order, double g);

// All interface fluxes of a padded row at once. row holds n + 2*ghost cells,
// faces receives n + 1 fluxes; face f separates row cells ghost-1+f and ghost+f.
void es_flux_row_x(std::span<const ConservedState> row, int ghost, int order,
                   double g, std::span<Vec6> faces);

}  // namespace ssw
