#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "ssw/sampling.hpp"
#include "ssw/state.hpp"

using namespace ssw;

namespace {

Vec6 numerical_entropy_gradient(const ConservedState& u) {
    Vec6 grad;
    const Vec6 base = u.as_vec();
    for (int k = 0; k < 6; ++k) {
        const double eps = 1e-6 * std::max(std::abs(base[k]), u.h);
        Vec6 up = base, dn = base;
        up[k] += eps;
        dn[k] -= eps;
        grad[k] = (entropy(ConservedState::from_vec(up)).eta -
                   entropy(ConservedState::from_vec(dn)).eta) /
                  (2 * eps);
    }
    return grad;
}

}  // namespace

TEST_CASE("prim_to_cons matches the equation of state") {
    const ConservedState u = prim_to_cons({2, 1, 0, 1, 0, 1});
    CHECK(u.h == doctest::Approx(2).epsilon(1e-14));
    CHECK(u.m1 == doctest::Approx(2).epsilon(1e-14));
    CHECK(u.m2 == doctest::Approx(0).epsilon(1e-14));
    CHECK(u.E11 == doctest::Approx(2).epsilon(1e-14));
    CHECK(u.E12 == doctest::Approx(0).epsilon(1e-14));
    CHECK(u.E22 == doctest::Approx(1).epsilon(1e-14));

    const ConservedState r = prim_to_cons({1, 0, 0, 1, 0, 1});
    CHECK(r.E11 == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(r.E12 == 0.0);
    CHECK(r.E22 == doctest::Approx(0.5).epsilon(1e-14));

    // E_ij = (h/2)(v_i v_j + P_ij) evaluated by hand for a generic state.
    const PrimitiveState w{0.01, 0.1, 0.2, 4e-2, 1e-8, 4e-2};
    const ConservedState g = prim_to_cons(w);
    CHECK(g.m1 == doctest::Approx(0.01 * 0.1).epsilon(1e-14));
    CHECK(g.m2 == doctest::Approx(0.01 * 0.2).epsilon(1e-14));
    CHECK(g.E11 == doctest::Approx(0.005 * (0.01 + 4e-2)).epsilon(1e-14));
    CHECK(g.E12 == doctest::Approx(0.005 * (0.02 + 1e-8)).epsilon(1e-14));
    CHECK(g.E22 == doctest::Approx(0.005 * (0.04 + 4e-2)).epsilon(1e-14));
}

TEST_CASE("cons_to_prim inverts prim_to_cons") {
    const PrimitiveState w = cons_to_prim({2, 2, 0, 2, 0, 1});
    CHECK(w.h == doctest::Approx(2).epsilon(1e-14));
    CHECK(w.v1 == doctest::Approx(1).epsilon(1e-14));
    CHECK(w.v2 == doctest::Approx(0).epsilon(1e-14));
    CHECK(w.P11 == doctest::Approx(1).epsilon(1e-14));
    CHECK(w.P12 == doctest::Approx(0).epsilon(1e-14));
    CHECK(w.P22 == doctest::Approx(1).epsilon(1e-14));

    std::mt19937_64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        const PrimitiveState a = random_admissible(rng);
        const PrimitiveState b = cons_to_prim(prim_to_cons(a));
        CHECK(b.h == doctest::Approx(a.h).epsilon(1e-14));
        CHECK(b.v1 == doctest::Approx(a.v1).epsilon(1e-13));
        CHECK(b.v2 == doctest::Approx(a.v2).epsilon(1e-13));
        CHECK(b.P11 == doctest::Approx(a.P11).epsilon(1e-12));
        CHECK(b.P12 == doctest::Approx(a.P12).epsilon(2e-12));
        CHECK(b.P22 == doctest::Approx(a.P22).epsilon(1e-12));
    }
}

TEST_CASE("inadmissible states raise typed errors") {
    CHECK_THROWS_AS(cons_to_prim({-1, 0, 0, 0.5, 0, 0.5}), NonPositiveDepth);
    CHECK_THROWS_AS(cons_to_prim({0, 0, 0, 0.5, 0, 0.5}), NonPositiveDepth);
    // Recovered P11 = 2 E11 / h - v1^2 = 1 - 1 = 0: boundary of the admissible set.
    CHECK_THROWS_AS(cons_to_prim({1, 1, 0, 0.5, 0, 0.5}), NonPositiveStress);
    CHECK_THROWS_AS(require_admissible({1, 0, 0, 1, 2, 1}), NonPositiveStress);
    CHECK(is_admissible({1, 0, 0, 1, 0, 1}));
    CHECK_FALSE(is_admissible({1, 0, 0, 1, 1.0000001, 1}));
}

TEST_CASE("entropy pair closed forms") {
    const EntropyPoint a = entropy(prim_to_cons({1, 0, 0, 1, 0, 1}));
    CHECK(a.s == doctest::Approx(0).epsilon(1e-14));
    CHECK(a.eta == doctest::Approx(0).epsilon(1e-14));

    const EntropyPoint b = entropy(prim_to_cons({2, 1, 0, 1, 0, 1}));
    CHECK(b.s == doctest::Approx(std::log(0.25)).epsilon(1e-14));
    CHECK(b.eta == doctest::Approx(4 * std::log(2.0)).epsilon(1e-14));

    const PrimitiveState fw{0.01, 0.1, 0.2, 4e-2, 1e-8, 4e-2};
    const EntropyPoint c = entropy(prim_to_cons(fw));
    const double s_expect = std::log(fw.det_P() / (fw.h * fw.h));
    CHECK(c.s == doctest::Approx(s_expect).epsilon(1e-13));
    CHECK(c.eta == doctest::Approx(-fw.h * s_expect).epsilon(1e-13));
}

TEST_CASE("entropy variables closed forms and gradient oracle") {
    const Vec6 v0 = entropy_vars(prim_to_cons({1, 0, 0, 1, 0, 1})).V;
    const double expect0[6] = {4, 0, 0, -2, 0, -2};
    for (int k = 0; k < 6; ++k) CHECK(v0[k] == doctest::Approx(expect0[k]).epsilon(1e-14));

    const Vec6 v1 = entropy_vars(prim_to_cons({2, 1, 0, 1, 0, 1})).V;
    CHECK(v1[0] == doctest::Approx(4 - std::log(0.25) - 1).epsilon(1e-14));
    CHECK(v1[1] == doctest::Approx(2).epsilon(1e-14));
    CHECK(v1[2] == doctest::Approx(0).epsilon(1e-14));
    CHECK(v1[3] == doctest::Approx(-2).epsilon(1e-14));
    CHECK(v1[4] == doctest::Approx(0).epsilon(1e-14));
    CHECK(v1[5] == doctest::Approx(-2).epsilon(1e-14));

    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        const ConservedState u = prim_to_cons(random_admissible(rng));
        const Vec6 V = entropy_vars(u).V;
        const Vec6 G = numerical_entropy_gradient(u);
        for (int k = 0; k < 6; ++k)
            CHECK(V[k] == doctest::Approx(G[k]).epsilon(1e-5).scale(V.max_abs()));
    }
}

TEST_CASE("entropy variable signs V4 < 0 and V6 < 0") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 1000; ++i) {
        const Vec6 V = entropy_vars(prim_to_cons(random_admissible(rng))).V;
        CHECK(V[3] < 0);
        CHECK(V[5] < 0);
    }
}

TEST_CASE("entropy potential is 2 h v") {
    const EntropyPotential p0 = entropy_potential(prim_to_cons({1, 0, 0, 1, 0, 1}));
    CHECK(p0.psi_x == doctest::Approx(0).epsilon(1e-14));
    CHECK(p0.psi_y == doctest::Approx(0).epsilon(1e-14));

    const EntropyPotential p1 = entropy_potential(prim_to_cons({2, 1, 0.5, 1, 0, 1}));
    CHECK(p1.psi_x == doctest::Approx(4).epsilon(1e-14));
    CHECK(p1.psi_y == doctest::Approx(2).epsilon(1e-14));
}

TEST_CASE("cons_from_entropy_vars inverts entropy_vars") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 1000; ++i) {
        const ConservedState u = prim_to_cons(random_admissible(rng));
        const ConservedState r = cons_from_entropy_vars(entropy_vars(u).V);
        const Vec6 a = u.as_vec(), b = r.as_vec();
        for (int k = 0; k < 6; ++k)
            CHECK(b[k] == doctest::Approx(a[k]).epsilon(1e-11).scale(a.max_abs()));
    }
}

TEST_CASE("swap_xy exchanges the coordinate roles") {
    const ConservedState u{1, 2, 3, 4, 5, 6};
    const ConservedState s = swap_xy(u);
    CHECK(s.h == 1);
    CHECK(s.m1 == 3);
    CHECK(s.m2 == 2);
    CHECK(s.E11 == 6);
    CHECK(s.E12 == 5);
    CHECK(s.E22 == 4);
    const ConservedState ss = swap_xy(s);
    CHECK(ss.m1 == u.m1);
    CHECK(ss.E11 == u.E11);
}
