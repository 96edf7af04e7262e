#include "ssw/dissipation.hpp"

#include <cassert>
#include <cmath>
#include <vector>

#include "ssw/ec_flux.hpp"
#include "ssw/reconstruct.hpp"

namespace ssw {

namespace {

constexpr int kSwap[6] = {0, 2, 1, 5, 4, 3};

Mat6 permute_rows_swap(const Mat6& A) {
    Mat6 B;
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 6; ++c) B(r, c) = A(kSwap[r], c);
    return B;
}

}  // namespace

Mat6 scaling_matrix_x(const PrimitiveState& w) {
    const double h = w.h;
    const double P11 = w.P11, P12 = w.P12;
    const double D = w.det_P();

    const double y_fast = 1.0 / (12 * h * P11 * P11);
    const double y_shear = D / (4 * h * P11 * P11);

    // 2x2 block Y_b and its square root via the characteristic polynomial.
    const double yb00 = 1.0 / (3 * h);
    const double yb01 = P12 * P12 / (3 * h * P11);
    const double yb11 = (3 * D * D + P12 * P12 * P12 * P12) / (3 * h * P11 * P11);
    const double r1 = D / (std::sqrt(3.0) * h * P11);  // sqrt(det Y_b)
    const double a1 = std::sqrt(yb00 + yb11 + 2 * r1);

    Mat6 T;
    T(0, 0) = std::sqrt(y_fast);
    T(1, 1) = std::sqrt(y_shear);
    T(2, 2) = (yb00 + r1) / a1;
    T(2, 3) = yb01 / a1;
    T(3, 2) = yb01 / a1;
    T(3, 3) = (yb11 + r1) / a1;
    T(4, 4) = std::sqrt(y_shear);
    T(5, 5) = std::sqrt(y_fast);
    return T;
}

Mat6 scaling_matrix_y(const PrimitiveState& w) {
    return scaling_matrix_x(swap_xy(w));
}

ScaledEigen scaled_eigensystem_x(const PrimitiveState& w, double g) {
    ScaledEigen e;
    e.T = scaling_matrix_x(w);
    e.R_tilde = right_eigenvectors_x(w) * e.T;
    (void)g;
    e.lambda = diffusion_speed_x(w);
    return e;
}

ScaledEigen scaled_eigensystem_y(const PrimitiveState& w, double g) {
    ScaledEigen e = scaled_eigensystem_x(swap_xy(w), g);
    e.R_tilde = permute_rows_swap(e.R_tilde);
    return e;
}

void es_flux_row_x(std::span<const ConservedState> row, int ghost, int order,
                   double g, std::span<Vec6> faces) {
    const int width = reconstruction_width(order);
    const int total = static_cast<int>(row.size());
    const int n = total - 2 * ghost;
    assert(static_cast<int>(faces.size()) == n + 1);
    assert(ghost >= width && (order <= 2 || ghost >= 2));

    std::vector<PrimitiveState> W(total);
    std::vector<Vec6> V(total);
    for (int c = 0; c < total; ++c) {
        W[c] = cons_to_prim(row[c]);
        V[c] = entropy_vars(row[c]).V;
    }

    Vec6 z[8];
    for (int f = 0; f <= n; ++f) {
        const int iL = ghost - 1 + f;

        Vec6 flux = (order <= 2)
                        ? ec_flux_x(W[iL], W[iL + 1])
                        : ec_flux4_x(W[iL - 1], W[iL], W[iL + 1], W[iL + 2]);

        const PrimitiveState w_avg{0.5 * (W[iL].h + W[iL + 1].h),
                                   0.5 * (W[iL].v1 + W[iL + 1].v1),
                                   0.5 * (W[iL].v2 + W[iL + 1].v2),
                                   0.5 * (W[iL].P11 + W[iL + 1].P11),
                                   0.5 * (W[iL].P12 + W[iL + 1].P12),
                                   0.5 * (W[iL].P22 + W[iL + 1].P22)};
        const ScaledEigen eig = scaled_eigensystem_x(w_avg, g);

        for (int c = 0; c < 2 * width; ++c)
            z[c] = eig.R_tilde.tmul(V[iL - width + 1 + c]);
        const Vec6 jump =
            reconstructed_jump(std::span<const Vec6>(z, 2 * width), order);

        faces[f] = flux - (0.5 * eig.lambda) * (eig.R_tilde * jump);
    }
}

Vec6 es_flux_x(std::span<const ConservedState> stencil, int order, double g) {
    const int width = reconstruction_width(order);
    assert(static_cast<int>(stencil.size()) == 2 * width);
    Vec6 face;
    es_flux_row_x(stencil, width, order, g, std::span<Vec6>(&face, 1));
    return face;
}

Vec6 es_flux_y(std::span<const ConservedState> stencil, int order, double g) {
    ConservedState swapped[8];
    const int n = static_cast<int>(stencil.size());
    for (int c = 0; c < n; ++c) swapped[c] = swap_xy(stencil[c]);
    return swap_xy(es_flux_x(std::span<const ConservedState>(swapped, n), order, g));
}

}  // namespace ssw
