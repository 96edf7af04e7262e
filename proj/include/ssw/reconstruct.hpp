#pragma once

#include <span>
#include <utility>

#include "ssw/vec6.hpp"

namespace ssw {

inline double minmod(double a, double b) {
    if (a > 0 && b > 0) return std::min(a, b);
    if (a < 0 && b < 0) return std::max(a, b);
    return 0.0;
}

// Second-order limited reconstruction of cell 0 from (vm, v0, vp).
// Returns the left- and right-face point values v0 -+ slope/2.
std::pair<double, double> minmod_jump(double vm, double v0, double vp);

enum class Face { Left, Right };

// ENO interpolation of point values at the face of the window's center cell.
// The window holds 2*order - 1 values centered on the target cell. The stencil
// is grown adaptively by Newton divided differences; ties extend left.
double eno_reconstruct(std::span<const double> window, int order, Face face);

// Componentwise face jump of reconstructed scaled entropy variables.
// z holds the stencil around the face: cells {i, i+1} for order 1,
// {i-1..i+2} for order 2, {i-2..i+3} for order 3, {i-3..i+4} for order 4.
// All values must be transformed with the same face-specific matrix.
Vec6 reconstructed_jump(std::span<const Vec6> z, int order);

// Number of cells on each side of a face entering reconstructed_jump.
constexpr int reconstruction_width(int order) {
    switch (order) {
        case 1: return 1;
        case 2: return 2;
        case 3: return 3;
        default: return 4;
    }
}

}  // namespace ssw
