#include "ssw/grid.hpp"

#include <cassert>

namespace ssw {

GridField::GridField(const Mesh& mesh) : mesh_(mesh) {
    stride_ = static_cast<std::size_t>(mesh.Nx + 2 * mesh.ghost);
    const std::size_t rows =
        static_cast<std::size_t>((mesh.dim == 2 ? mesh.Ny : 1) + 2 * mesh.ghost);
    for (auto& c : comp_) c.assign(stride_ * rows, 0.0);
}

void GridField::fill_ghosts(const BoundaryCondition& bc) {
    const int g = mesh_.ghost;
    const int Nx = mesh_.Nx;
    const int Ny = mesh_.dim == 2 ? mesh_.Ny : 1;

    for (int k = 0; k < 6; ++k) {
        for (int j = 0; j < Ny; ++j) {
            for (int q = 1; q <= g; ++q) {
                if (bc.x == BcKind::Periodic) {
                    comp_[k][idx(-q, j)] = comp_[k][idx(Nx - q, j)];
                    comp_[k][idx(Nx - 1 + q, j)] = comp_[k][idx(q - 1, j)];
                } else {
                    comp_[k][idx(-q, j)] = comp_[k][idx(0, j)];
                    comp_[k][idx(Nx - 1 + q, j)] = comp_[k][idx(Nx - 1, j)];
                }
            }
        }
        if (mesh_.dim == 2) {
            // Includes the x-ghost columns so corners are consistent.
            for (int i = -g; i < Nx + g; ++i) {
                for (int q = 1; q <= g; ++q) {
                    if (bc.y == BcKind::Periodic) {
                        comp_[k][idx(i, -q)] = comp_[k][idx(i, Ny - q)];
                        comp_[k][idx(i, Ny - 1 + q)] = comp_[k][idx(i, q - 1)];
                    } else {
                        comp_[k][idx(i, -q)] = comp_[k][idx(i, 0)];
                        comp_[k][idx(i, Ny - 1 + q)] = comp_[k][idx(i, Ny - 1)];
                    }
                }
            }
        }
    }
}

void central_diff(std::span<const double> values, int ghost, int order,
                  double spacing, std::span<double> out) {
    const int n = static_cast<int>(out.size());
    assert(static_cast<int>(values.size()) == n + 2 * ghost);
    assert(order == 2 || order == 4);
    assert(ghost >= order / 2);
    const double* v = values.data() + ghost;
    if (order == 2) {
        const double c = 1.0 / (2 * spacing);
        for (int i = 0; i < n; ++i) out[i] = c * (v[i + 1] - v[i - 1]);
    } else {
        const double c = 1.0 / (12 * spacing);
        for (int i = 0; i < n; ++i)
            out[i] = c * (-v[i + 2] + 8 * v[i + 1] - 8 * v[i - 1] + v[i - 2]);
    }
}

}  // namespace ssw
