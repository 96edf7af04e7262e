#pragma once

#include "ssw/state.hpp"
#include "ssw/vec6.hpp"

namespace ssw {

// Logarithmic mean (b - a) / (ln b - ln a), with a series branch near a = b.
double log_mean(double a, double b);

// Pairwise averages shared by the entropy conservative flux components.
struct AveragedPair {
    double h_bar, v1_bar, v2_bar;
    double b11_bar, b12_bar, b22_bar;  // beta_ij = P_ij / det P, averaged
    double v1sq_bar, v2sq_bar, v1v2_bar;
    double h_ln;     // log mean of h
    double Db_ln;    // log mean of D_beta = b11 b22 - b12^2

    AveragedPair(const PrimitiveState& wL, const PrimitiveState& wR);
};

// Two-point entropy conservative fluxes satisfying [[V]]^T F = [[psi]].
Vec6 ec_flux_x(const ConservedState& uL, const ConservedState& uR);
Vec6 ec_flux_x(const PrimitiveState& wL, const PrimitiveState& wR);
Vec6 ec_flux_y(const ConservedState& uL, const ConservedState& uR);

// Fourth-order combination 4/3 F(u_i,u_{i+1}) - 1/6 (F(u_{i-1},u_{i+1}) + F(u_i,u_{i+2})).
Vec6 ec_flux4_x(const ConservedState& u_im1, const ConservedState& u_i,
                const ConservedState& u_ip1, const ConservedState& u_ip2);
Vec6 ec_flux4_x(const PrimitiveState& w_im1, const PrimitiveState& w_i,
                const PrimitiveState& w_ip1, const PrimitiveState& w_ip2);
Vec6 ec_flux4_y(const ConservedState& u_jm1, const ConservedState& u_j,
                const ConservedState& u_jp1, const ConservedState& u_jp2);

}  // namespace ssw
