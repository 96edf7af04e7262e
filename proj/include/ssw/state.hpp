#pragma once

#include <stdexcept>
#include <string>

#include "ssw/vec6.hpp"

namespace ssw {

struct ModelParams {
    double g = 9.81;    // gravitational acceleration [m/s^2]
    double C_f = 0.0;   // Chezy friction coefficient
    double C_r = 0.0;   // dissipation model constant
    double phi = 0.0;   // enstrophy-like constant [1/s^2]
    double theta = 0.0; // bottom slope angle [rad]
};

// W = (h, v1, v2, P11, P12, P22)
struct PrimitiveState {
    double h, v1, v2, P11, P12, P22;

    double det_P() const { return P11 * P22 - P12 * P12; }
    double trace_P() const { return P11 + P22; }
};

// U = (h, h v1, h v2, E11, E12, E22)
struct ConservedState {
    double h, m1, m2, E11, E12, E22;

    Vec6 as_vec() const { return Vec6{{h, m1, m2, E11, E12, E22}}; }
    static ConservedState from_vec(const Vec6& u) {
        return {u[0], u[1], u[2], u[3], u[4], u[5]};
    }
};

struct EntropyVars {
    Vec6 V;
    double& operator[](std::size_t i) { return V[i]; }
    const double& operator[](std::size_t i) const { return V[i]; }
};

class AdmissibilityError : public std::runtime_error {
  public:
    explicit AdmissibilityError(const std::string& what) : std::runtime_error(what) {}
};

class NonPositiveDepth : public AdmissibilityError {
  public:
    explicit NonPositiveDepth(double h)
        : AdmissibilityError("non-positive water depth h = " + std::to_string(h)) {}
};

class NonPositiveStress : public AdmissibilityError {
  public:
    NonPositiveStress(const std::string& minor, double value)
        : AdmissibilityError("stress tensor not positive definite: " + minor +
                             " = " + std::to_string(value)) {}
};

// Strict-positivity floor for h and det P. States below it raise errors,
// they are never clipped.
inline constexpr double kAdmissibilityFloor = 1e-13;

bool is_admissible(const PrimitiveState& w);
void require_admissible(const PrimitiveState& w);

ConservedState prim_to_cons(const PrimitiveState& w);
PrimitiveState cons_to_prim(const ConservedState& u);

// Entropy pair pieces: s = log(det P / h^2), eta = -h s.
struct EntropyPoint {
    double eta;
    double s;
};
EntropyPoint entropy(const ConservedState& u);

EntropyVars entropy_vars(const ConservedState& u);

// Inverse of the entropy-variable map: the unique admissible U with
// entropy_vars(U) = V. Used by verification oracles.
ConservedState cons_from_entropy_vars(const Vec6& V);

// psi^x = 2 h v1, psi^y = 2 h v2.
struct EntropyPotential {
    double psi_x;
    double psi_y;
};
EntropyPotential entropy_potential(const ConservedState& u);

// Swap of the x and y roles: (h, m1, m2, E11, E12, E22) -> (h, m2, m1, E22, E12, E11).
// All y-direction kernels are the x-direction kernels conjugated by this map.
inline Vec6 swap_xy(const Vec6& u) {
    return Vec6{{u[0], u[2], u[1], u[5], u[4], u[3]}};
}
inline ConservedState swap_xy(const ConservedState& u) {
    return {u.h, u.m2, u.m1, u.E22, u.E12, u.E11};
}
inline PrimitiveState swap_xy(const PrimitiveState& w) {
    return {w.h, w.v2, w.v1, w.P22, w.P12, w.P11};
}

}  // namespace ssw
