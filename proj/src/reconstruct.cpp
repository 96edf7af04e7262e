#include "ssw/reconstruct.hpp"

#include <cassert>
#include <cmath>

namespace ssw {

std::pair<double, double> minmod_jump(double vm, double v0, double vp) {
    const double slope = minmod(v0 - vm, vp - v0);
    return {v0 - 0.5 * slope, v0 + 0.5 * slope};
}

double eno_reconstruct(std::span<const double> window, int order, Face face) {
    const int k = order;
    const int n = 2 * k - 1;
    assert(static_cast<int>(window.size()) == n);
    const int center = k - 1;
    const double x = (face == Face::Right) ? 0.5 : -0.5;

    // d[c] holds the current-order divided difference over [c, c+m].
    double d[7];
    for (int c = 0; c < n; ++c) d[c] = window[c];

    int l = center, r = center;
    double coeff[4];
    int inserted[4];
    coeff[0] = d[center];
    inserted[0] = center;

    for (int m = 1; m < k; ++m) {
        for (int c = 0; c + m < n; ++c) d[c] = (d[c + 1] - d[c]) / m;
        // Extend toward the smaller divided difference; ties go left.
        if (std::abs(d[l - 1]) <= std::abs(d[l]) || r + 1 >= n) {
            --l;
            inserted[m] = l;
        } else {
            ++r;
            inserted[m] = r;
        }
        coeff[m] = d[l];
    }

    double value = coeff[0];
    double prod = 1.0;
    for (int m = 1; m < k; ++m) {
        prod *= x - (inserted[m - 1] - center);
        value += coeff[m] * prod;
    }
    return value;
}

Vec6 reconstructed_jump(std::span<const Vec6> z, int order) {
    [[maybe_unused]] const int w = reconstruction_width(order);
    assert(static_cast<int>(z.size()) == 2 * w);
    Vec6 jump;
    switch (order) {
        case 1:
            jump = z[1] - z[0];
            break;
        case 2:
            for (int c = 0; c < 6; ++c) {
                const double right_of_i = minmod_jump(z[0][c], z[1][c], z[2][c]).second;
                const double left_of_ip1 = minmod_jump(z[1][c], z[2][c], z[3][c]).first;
                jump[c] = left_of_ip1 - right_of_i;
            }
            break;
        default: {
            const int n = 2 * order - 1;
            for (int c = 0; c < 6; ++c) {
                double buf[7];
                for (int s = 0; s < n; ++s) buf[s] = z[s][c];
                const double right_of_i =
                    eno_reconstruct(std::span<const double>(buf, n), order, Face::Right);
                for (int s = 0; s < n; ++s) buf[s] = z[s + 1][c];
                const double left_of_ip1 =
                    eno_reconstruct(std::span<const double>(buf, n), order, Face::Left);
                jump[c] = left_of_ip1 - right_of_i;
            }
            break;
        }
    }
    return jump;
}

}  // namespace ssw
