#include "ssw/physics.hpp"

#include <cmath>

namespace ssw {

namespace {

constexpr int kSwap[6] = {0, 2, 1, 5, 4, 3};

// Row permutation implementing the x<->y index swap on conserved components.
Mat6 permute_rows_swap(const Mat6& A) {
    Mat6 B;
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 6; ++c) B(r, c) = A(kSwap[r], c);
    return B;
}

}  // namespace

Vec6 flux_x(const ConservedState& u) {
    const PrimitiveState w = cons_to_prim(u);
    Vec6 f;
    f[0] = w.h * w.v1;
    f[1] = w.h * (w.v1 * w.v1 + w.P11);
    f[2] = w.h * (w.v1 * w.v2 + w.P12);
    f[3] = 0.5 * w.h * w.v1 * (w.v1 * w.v1 + 3 * w.P11);
    f[4] = 0.5 * w.h * (w.v1 * w.v1 * w.v2 + 2 * w.v1 * w.P12 + w.v2 * w.P11);
    f[5] = 0.5 * w.h * (w.v1 * w.v2 * w.v2 + 2 * w.v2 * w.P12 + w.v1 * w.P22);
    return f;
}

Vec6 flux_y(const ConservedState& u) {
    return swap_xy(flux_x(swap_xy(u)));
}

Vec6 noncons_x(const ConservedState& u, double g) {
    const double v1 = u.m1 / u.h;
    const double v2 = u.m2 / u.h;
    return Vec6{{0, g * u.h, 0, g * u.h * v1, 0.5 * g * u.h * v2, 0}};
}

Vec6 noncons_y(const ConservedState& u, double g) {
    return swap_xy(noncons_x(swap_xy(u), g));
}

double alpha_closure(const PrimitiveState& w, const ModelParams& p) {
    const double T = w.trace_P();
    return std::max(0.0, p.C_r * (T - p.phi * w.h * w.h) / (T * T));
}

Vec6 source(const ConservedState& u, double db_dx, double db_dy, const ModelParams& p) {
    const PrimitiveState w = cons_to_prim(u);
    const double vmag = std::hypot(w.v1, w.v2);
    const double a = alpha_closure(w, p);
    const double av3 = a * vmag * vmag * vmag;
    const double gh = p.g * w.h;
    Vec6 s;
    s[0] = 0;
    s[1] = -gh * db_dx - p.C_f * vmag * w.v1;
    s[2] = -gh * db_dy - p.C_f * vmag * w.v2;
    s[3] = -av3 * w.P11 - gh * w.v1 * db_dx - p.C_f * vmag * w.v1 * w.v1;
    s[4] = -av3 * w.P12 - 0.5 * gh * w.v2 * db_dx - 0.5 * gh * w.v1 * db_dy -
           p.C_f * vmag * w.v1 * w.v2;
    s[5] = -av3 * w.P22 - gh * w.v2 * db_dy - p.C_f * vmag * w.v2 * w.v2;
    return s;
}

std::array<double, 6> eigenvalues_x(const PrimitiveState& w, double g) {
    const double a = std::sqrt(g * w.h + 3 * w.P11);
    const double c = std::sqrt(w.P11);
    return {w.v1 - a, w.v1 - c, w.v1, w.v1, w.v1 + c, w.v1 + a};
}

std::array<double, 6> eigenvalues_y(const PrimitiveState& w, double g) {
    return eigenvalues_x(swap_xy(w), g);
}

Mat6 jacobian_prim_to_cons(const PrimitiveState& w) {
    Mat6 J;
    J(0, 0) = 1;
    J(1, 0) = w.v1;
    J(1, 1) = w.h;
    J(2, 0) = w.v2;
    J(2, 2) = w.h;
    J(3, 0) = 0.5 * (w.P11 + w.v1 * w.v1);
    J(3, 1) = w.h * w.v1;
    J(3, 3) = 0.5 * w.h;
    J(4, 0) = 0.5 * (w.P12 + w.v1 * w.v2);
    J(4, 1) = 0.5 * w.h * w.v2;
    J(4, 2) = 0.5 * w.h * w.v1;
    J(4, 4) = 0.5 * w.h;
    J(5, 0) = 0.5 * (w.P22 + w.v2 * w.v2);
    J(5, 2) = w.h * w.v2;
    J(5, 5) = 0.5 * w.h;
    return J;
}

Mat6 right_eigenvectors_prim_x(const PrimitiveState& w) {
    const double c3 = std::sqrt(3 * w.P11);
    const double c = std::sqrt(w.P11);
    Mat6 R;
    R(0, 0) = w.h * w.P11;
    R(0, 2) = -w.h;
    R(0, 5) = w.h * w.P11;
    R(1, 0) = -c3 * w.P11;
    R(1, 5) = c3 * w.P11;
    R(2, 0) = -c3 * w.P12;
    R(2, 1) = -c;
    R(2, 4) = c;
    R(2, 5) = c3 * w.P12;
    R(3, 0) = 2 * w.P11 * w.P11;
    R(3, 2) = w.P11;
    R(3, 5) = 2 * w.P11 * w.P11;
    R(4, 0) = 2 * w.P11 * w.P12;
    R(4, 1) = w.P11;
    R(4, 2) = w.P12;
    R(4, 4) = w.P11;
    R(4, 5) = 2 * w.P11 * w.P12;
    R(5, 0) = 2 * w.P12 * w.P12;
    R(5, 1) = 2 * w.P12;
    R(5, 3) = 1;
    R(5, 4) = 2 * w.P12;
    R(5, 5) = 2 * w.P12 * w.P12;
    return R;
}

Mat6 right_eigenvectors_x(const PrimitiveState& w) {
    return jacobian_prim_to_cons(w) * right_eigenvectors_prim_x(w);
}

Mat6 right_eigenvectors_y(const PrimitiveState& w) {
    return permute_rows_swap(right_eigenvectors_x(swap_xy(w)));
}

std::array<double, 6> conservative_eigenvalues_x(const PrimitiveState& w) {
    const double c3 = std::sqrt(3 * w.P11);
    const double c = std::sqrt(w.P11);
    return {w.v1 - c3, w.v1 - c, w.v1, w.v1, w.v1 + c, w.v1 + c3};
}

}  // namespace ssw
