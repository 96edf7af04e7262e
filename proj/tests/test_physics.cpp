#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "ssw/physics.hpp"
#include "ssw/sampling.hpp"
#include "ssw/state.hpp"

using namespace ssw;

namespace {

// Finite-difference Jacobian of the conservative flux dF^x/dU.
Mat6 fd_flux_jacobian_x(const ConservedState& u) {
    Mat6 J;
    const Vec6 base = u.as_vec();
    for (int c = 0; c < 6; ++c) {
        const double eps = 1e-7 * std::max(std::abs(base[c]), u.h);
        Vec6 up = base, dn = base;
        up[c] += eps;
        dn[c] -= eps;
        const Vec6 fp = flux_x(ConservedState::from_vec(up));
        const Vec6 fm = flux_x(ConservedState::from_vec(dn));
        for (int r = 0; r < 6; ++r) J(r, c) = (fp[r] - fm[r]) / (2 * eps);
    }
    return J;
}

}  // namespace

TEST_CASE("flux_x hand-evaluated examples") {
    const Vec6 f0 = flux_x(prim_to_cons({1, 0, 0, 1, 0, 1}));
    const double e0[6] = {0, 1, 0, 0, 0, 0};
    for (int k = 0; k < 6; ++k) CHECK(f0[k] == doctest::Approx(e0[k]).epsilon(1e-14));

    // With v2 = 0 and P12 = 0 the E12 flux 0.5 h (v1^2 v2 + 2 v1 P12 + v2 P11)
    // vanishes; the E22 flux is 0.5 h v1 P22 = 1.
    const Vec6 f1 = flux_x(prim_to_cons({2, 1, 0, 1, 0, 1}));
    const double e1[6] = {2, 4, 0, 4, 0, 1};
    for (int k = 0; k < 6; ++k) CHECK(f1[k] == doctest::Approx(e1[k]).epsilon(1e-14));

    const Vec6 f2 = flux_x(prim_to_cons({2, 1, 3, 1, 0.5, 1}));
    CHECK(f2[4] == doctest::Approx(0.5 * 2 * (3 + 1 + 3)).epsilon(1e-14));
    CHECK(f2[5] == doctest::Approx(0.5 * 2 * (9 + 3 + 1)).epsilon(1e-14));
}

TEST_CASE("flux x/y swap symmetry") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        const ConservedState u = prim_to_cons(random_admissible(rng));
        const Vec6 fy = flux_y(u);
        const Vec6 fx_sw = swap_xy(flux_x(swap_xy(u)));
        for (int k = 0; k < 6; ++k)
            CHECK(fy[k] == doctest::Approx(fx_sw[k]).epsilon(1e-14));
    }
}

TEST_CASE("non-conservative vectors") {
    const double g = 9.81;
    const Vec6 b0 = noncons_x(prim_to_cons({1, 0, 0, 1, 0, 1}), g);
    const double e0[6] = {0, 9.81, 0, 0, 0, 0};
    for (int k = 0; k < 6; ++k) CHECK(b0[k] == doctest::Approx(e0[k]).epsilon(1e-14));

    const Vec6 b1 = noncons_x(prim_to_cons({2, 1, 2, 1, 0, 1}), g);
    const double e1[6] = {0, 19.62, 0, 19.62, 19.62, 0};
    for (int k = 0; k < 6; ++k) CHECK(b1[k] == doctest::Approx(e1[k]).epsilon(1e-13));

    // B^y is the swap conjugate of B^x.
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        const ConservedState u = prim_to_cons(random_admissible(rng));
        const Vec6 by = noncons_y(u, g);
        const Vec6 bx_sw = swap_xy(noncons_x(swap_xy(u), g));
        for (int k = 0; k < 6; ++k)
            CHECK(by[k] == doctest::Approx(bx_sw[k]).epsilon(1e-14));
    }
}

TEST_CASE("entropy variables annihilate the non-conservative vectors") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 1000; ++i) {
        const ConservedState u = prim_to_cons(random_admissible(rng));
        const Vec6 V = entropy_vars(u).V;
        const double scale = 1 + 9.81 * u.h * u.h;
        CHECK(std::abs(dot(V, noncons_x(u, 9.81))) / scale < 1e-12);
        CHECK(std::abs(dot(V, noncons_y(u, 9.81))) / scale < 1e-12);
    }
}

TEST_CASE("entropy potential identity V^T F - q = psi") {
    // q^x = -h s v1 is the entropy flux; check V.F^x - q^x = 2 h v1.
    std::mt19937_64 rng(21);
    for (int i = 0; i < 1000; ++i) {
        const PrimitiveState w = random_admissible(rng);
        const ConservedState u = prim_to_cons(w);
        const Vec6 V = entropy_vars(u).V;
        const double qx = entropy(u).eta * w.v1;
        const double qy = entropy(u).eta * w.v2;
        const double scale = 1 + std::abs(entropy_potential(u).psi_x);
        CHECK(std::abs(dot(V, flux_x(u)) - qx - 2 * w.h * w.v1) / scale < 1e-12);
        CHECK(std::abs(dot(V, flux_y(u)) - qy - 2 * w.h * w.v2) / scale < 1e-12);
    }
}

TEST_CASE("alpha closure clamps at the enstrophy equilibrium") {
    ModelParams p;
    p.C_r = 0.00035;
    p.phi = 22.7;
    const double h = 7.98e-3;
    const double Peq = 0.5 * p.phi * h * h;
    CHECK(alpha_closure({h, 0.1, 0, Peq, 0, Peq}, p) == 0.0);
    CHECK(alpha_closure({h, 0.1, 0, 0.5 * Peq, 0, 0.5 * Peq}, p) == 0.0);
    CHECK(alpha_closure({h, 0.1, 0, 2 * Peq, 0, 2 * Peq}, p) > 0.0);

    // Generic value: alpha = C_r (T - phi h^2)/T^2.
    const double T = 4 * Peq;
    const double expect = p.C_r * (T - p.phi * h * h) / (T * T);
    CHECK(alpha_closure({h, 0.1, 0, 2 * Peq, 0, 2 * Peq}, p) ==
          doctest::Approx(expect).epsilon(1e-14));
}

TEST_CASE("source term components") {
    ModelParams p;
    p.g = 9.81;
    p.C_f = 0.01;

    // At rest only topography acts.
    const Vec6 s0 = source(prim_to_cons({2, 0, 0, 1, 0, 1}), 0.25, -0.5, p);
    CHECK(s0[0] == 0.0);
    CHECK(s0[1] == doctest::Approx(-9.81 * 2 * 0.25).epsilon(1e-14));
    CHECK(s0[2] == doctest::Approx(9.81 * 2 * 0.5).epsilon(1e-14));
    CHECK(s0[3] == 0.0);
    CHECK(s0[5] == 0.0);

    // Flat bottom, alpha = 0: Chezy friction on the momentum slots.
    const Vec6 s1 = source(prim_to_cons({2, 3, -4, 1, 0, 1}), 0, 0, p);
    CHECK(s1[1] == doctest::Approx(-p.C_f * 5.0 * 3.0).epsilon(1e-13));
    CHECK(s1[2] == doctest::Approx(p.C_f * 5.0 * 4.0).epsilon(1e-13));

    // Roll-wave equilibrium: gravity forcing balances friction exactly.
    ModelParams rw;
    rw.g = 9.81;
    rw.C_f = 0.0036;
    rw.theta = 0.05011;
    const double h0 = 7.98e-3;
    const double v0 = std::sqrt(rw.g * h0 * std::tan(rw.theta) / rw.C_f);
    const Vec6 srw = source(prim_to_cons({h0, v0, 0, 1e-4, 0, 1e-4}), -std::tan(rw.theta), 0, rw);
    CHECK(std::abs(srw[1]) < 1e-14);
}

TEST_CASE("eigenvalues match the closed forms and the FD Jacobian") {
    const auto lam = eigenvalues_x({0.01, 0, 0, 1e-4, 0, 1e-4}, 9.81);
    const double fast = std::sqrt(0.0984);
    CHECK(lam[0] == doctest::Approx(-fast).epsilon(1e-9));
    CHECK(fast == doctest::Approx(0.313688).epsilon(1e-5));
    CHECK(lam[1] == doctest::Approx(-0.01).epsilon(1e-12));
    CHECK(lam[2] == doctest::Approx(0).epsilon(1e-14));
    CHECK(lam[3] == doctest::Approx(0).epsilon(1e-14));
    CHECK(lam[4] == doctest::Approx(0.01).epsilon(1e-12));
    CHECK(lam[5] == doctest::Approx(fast).epsilon(1e-9));

    // Eigenvalues listed ascending are symmetric about v1.
    std::mt19937_64 rng(31);
    for (int i = 0; i < 100; ++i) {
        const PrimitiveState w = random_admissible(rng);
        const auto l = eigenvalues_x(w, 9.81);
        CHECK(std::is_sorted(l.begin(), l.end()));
        for (int k = 0; k < 3; ++k)
            CHECK(l[k] - w.v1 == doctest::Approx(-(l[5 - k] - w.v1)).epsilon(1e-11));
    }
}

TEST_CASE("right eigenvectors diagonalize the FD flux Jacobian") {
    std::mt19937_64 rng(33);
    for (int i = 0; i < 30; ++i) {
        const PrimitiveState w = random_admissible(rng);
        const ConservedState u = prim_to_cons(w);
        const Mat6 J = fd_flux_jacobian_x(u);
        const Mat6 R = right_eigenvectors_x(w);
        const auto lam = conservative_eigenvalues_x(w);
        const double scale = J.max_abs() * R.max_abs();
        for (int c = 0; c < 6; ++c) {
            Vec6 r;
            for (int k = 0; k < 6; ++k) r[k] = R(k, c);
            const Vec6 jr = J * r;
            for (int k = 0; k < 6; ++k)
                CHECK(std::abs(jr[k] - lam[c] * r[k]) < 2e-5 * scale);
        }
    }
}

TEST_CASE("conservative eigenvalues use sqrt(3 P11) in the fast family") {
    const PrimitiveState w{2, 1, 0, 1, 0, 1};
    const auto l = conservative_eigenvalues_x(w);
    CHECK(l[0] == doctest::Approx(1 - std::sqrt(3.0)).epsilon(1e-13));
    CHECK(l[5] == doctest::Approx(1 + std::sqrt(3.0)).epsilon(1e-13));
    CHECK(l[1] == doctest::Approx(0).epsilon(1e-13));
    CHECK(l[4] == doctest::Approx(2).epsilon(1e-13));
}

TEST_CASE("speed bounds for CFL and dissipation") {
    const PrimitiveState w{0.01, 0, 0, 1e-4, 0, 1e-4};
    CHECK(max_speed_x(w, 9.81) == doctest::Approx(std::sqrt(0.0984)).epsilon(1e-12));
    CHECK(max_speed_x(w, 9.81) == doctest::Approx(0.313688).epsilon(1e-5));
    std::mt19937_64 rng(35);
    for (int i = 0; i < 200; ++i) {
        const PrimitiveState a = random_admissible(rng);
        CHECK(max_speed_x(a, 9.81) > 0);
        const auto l = eigenvalues_x(a, 9.81);
        const double lmax = std::max(std::abs(l[0]), std::abs(l[5]));
        CHECK(max_speed_x(a, 9.81) == doctest::Approx(lmax).epsilon(1e-12));
        // The CFL speed dominates the Rusanov diffusion coefficient.
        CHECK(diffusion_speed_x(a) <= max_speed_x(a, 9.81) + 1e-12);
    }
}

TEST_CASE("y-direction eigensystem is the swap conjugate") {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 100; ++i) {
        const PrimitiveState w = random_admissible(rng);
        const auto ly = eigenvalues_y(w, 9.81);
        const auto lx = eigenvalues_x(swap_xy(w), 9.81);
        for (int k = 0; k < 6; ++k) CHECK(ly[k] == doctest::Approx(lx[k]).epsilon(1e-13));
        CHECK(max_speed_y(w, 9.81) == doctest::Approx(max_speed_x(swap_xy(w), 9.81)).epsilon(1e-14));
        CHECK(diffusion_speed_y(w) == doctest::Approx(diffusion_speed_x(swap_xy(w))).epsilon(1e-14));
    }
}
