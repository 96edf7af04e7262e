#pragma once

#include <random>

#include "ssw/state.hpp"

namespace ssw {

// Random admissible primitive state spanning several decades of depth and
// stress magnitude, with a positive definite P built from a random L L^T.
inline PrimitiveState random_admissible(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> sym(-1.0, 1.0);
    while (true) {
        const double h = std::pow(10.0, -1 + 2 * unit(rng));  // 1e-1 .. 1e1
        const double scale = std::pow(10.0, -0.5 + unit(rng));
        const double l11 = (0.3 + unit(rng)) * scale;
        const double l21 = 0.5 * sym(rng) * scale;
        const double l22 = (0.3 + unit(rng)) * scale;
        const PrimitiveState w{h,
                               2 * sym(rng),
                               2 * sym(rng),
                               l11 * l11,
                               l11 * l21,
                               l21 * l21 + l22 * l22};
        // Bounded anisotropy keeps the entropy variables well conditioned.
        if (is_admissible(w) && w.det_P() > 1e-3 * w.P11 * w.P22) return w;
    }
}

// Random pair of nearby admissible states, useful for interface checks.
inline PrimitiveState perturb(const PrimitiveState& w, double rel,
                              std::mt19937_64& rng) {
    std::uniform_real_distribution<double> sym(-rel, rel);
    PrimitiveState p{w.h * (1 + sym(rng)), w.v1 + sym(rng), w.v2 + sym(rng),
                     w.P11 * (1 + sym(rng)), w.P12 * (1 + sym(rng)),
                     w.P22 * (1 + sym(rng))};
    if (p.det_P() <= 0) p.P12 = 0;
    return p;
}

}  // namespace ssw
