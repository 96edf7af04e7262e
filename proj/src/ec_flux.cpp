#include "ssw/ec_flux.hpp"

#include <cmath>

namespace ssw {

double log_mean(double a, double b) {
    const double zeta = a / b;
    const double om = 1.0 - zeta;
    if (om * om < 1e-4) {
        // Guarded series in f = (a-b)/(a+b): a^ln = (a+b)/2 / (1 + f^2/3 + f^4/5 + f^6/7).
        const double f = (a - b) / (a + b);
        const double f2 = f * f;
        return 0.5 * (a + b) / (1.0 + f2 * (1.0 / 3 + f2 * (1.0 / 5 + f2 / 7)));
    }
    return (b - a) / std::log(b / a);
}

AveragedPair::AveragedPair(const PrimitiveState& wL, const PrimitiveState& wR) {
    const double DL = wL.det_P();
    const double DR = wR.det_P();
    const double b11L = wL.P11 / DL, b12L = wL.P12 / DL, b22L = wL.P22 / DL;
    const double b11R = wR.P11 / DR, b12R = wR.P12 / DR, b22R = wR.P22 / DR;
    h_bar = 0.5 * (wL.h + wR.h);
    v1_bar = 0.5 * (wL.v1 + wR.v1);
    v2_bar = 0.5 * (wL.v2 + wR.v2);
    b11_bar = 0.5 * (b11L + b11R);
    b12_bar = 0.5 * (b12L + b12R);
    b22_bar = 0.5 * (b22L + b22R);
    v1sq_bar = 0.5 * (wL.v1 * wL.v1 + wR.v1 * wR.v1);
    v2sq_bar = 0.5 * (wL.v2 * wL.v2 + wR.v2 * wR.v2);
    v1v2_bar = 0.5 * (wL.v1 * wL.v2 + wR.v1 * wR.v2);
    h_ln = log_mean(wL.h, wR.h);
    Db_ln = log_mean(b11L * b22L - b12L * b12L, b11R * b22R - b12R * b12R);
}

Vec6 ec_flux_x(const PrimitiveState& wL, const PrimitiveState& wR) {
    const AveragedPair a(wL, wR);
    const double Db_bar = a.b11_bar * a.b22_bar - a.b12_bar * a.b12_bar;
    Vec6 f;
    f[0] = a.h_ln * a.v1_bar;
    f[1] = a.v1_bar * f[0] + a.b11_bar * a.h_bar / Db_bar;
    f[2] = a.v2_bar * f[0] + a.b12_bar * a.h_bar / Db_bar;
    f[3] = 0.5 * (a.b11_bar / a.Db_ln - a.v1sq_bar) * f[0] + a.v1_bar * f[1];
    f[4] = 0.5 * ((a.b12_bar / a.Db_ln - a.v1v2_bar) * f[0] + a.v1_bar * f[2] +
                  a.v2_bar * f[1]);
    f[5] = 0.5 * (a.b22_bar / a.Db_ln - a.v2sq_bar) * f[0] + a.v2_bar * f[2];
    return f;
}

Vec6 ec_flux_x(const ConservedState& uL, const ConservedState& uR) {
    return ec_flux_x(cons_to_prim(uL), cons_to_prim(uR));
}

Vec6 ec_flux_y(const ConservedState& uL, const ConservedState& uR) {
    return swap_xy(ec_flux_x(swap_xy(uL), swap_xy(uR)));
}

Vec6 ec_flux4_x(const PrimitiveState& w_im1, const PrimitiveState& w_i,
                const PrimitiveState& w_ip1, const PrimitiveState& w_ip2) {
    return (4.0 / 3.0) * ec_flux_x(w_i, w_ip1) -
           (1.0 / 6.0) * (ec_flux_x(w_im1, w_ip1) + ec_flux_x(w_i, w_ip2));
}

Vec6 ec_flux4_x(const ConservedState& u_im1, const ConservedState& u_i,
                const ConservedState& u_ip1, const ConservedState& u_ip2) {
    return ec_flux4_x(cons_to_prim(u_im1), cons_to_prim(u_i), cons_to_prim(u_ip1),
                      cons_to_prim(u_ip2));
}

Vec6 ec_flux4_y(const ConservedState& u_jm1, const ConservedState& u_j,
                const ConservedState& u_jp1, const ConservedState& u_jp2) {
    return swap_xy(ec_flux4_x(swap_xy(u_jm1), swap_xy(u_j), swap_xy(u_jp1),
                              swap_xy(u_jp2)));
}

}  // namespace ssw
