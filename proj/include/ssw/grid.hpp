#pragma once

#include <span>
#include <vector>

#include "ssw/state.hpp"

namespace ssw {

struct Mesh {
    double xa = 0, xb = 1, ya = 0, yb = 1;
    int Nx = 1, Ny = 1;
    int ghost = 2;
    int dim = 1;

    double dx() const { return (xb - xa) / Nx; }
    double dy() const { return (yb - ya) / Ny; }
    // Cell-centered collocation nodes.
    double xc(int i) const { return xa + (i + 0.5) * dx(); }
    double yc(int j) const { return ya + (j + 0.5) * dy(); }
    double cell_measure() const { return dim == 2 ? dx() * dy() : dx(); }
};

enum class BcKind { Periodic, Neumann };

struct BoundaryCondition {
    BcKind x = BcKind::Periodic;
    BcKind y = BcKind::Periodic;
};

// Uniform structured field of conserved states with ghost layers.
// Storage is structure-of-arrays over the 6 components, row-major in (j, i).
class GridField {
  public:
    GridField() = default;
    explicit GridField(const Mesh& mesh);

    const Mesh& mesh() const { return mesh_; }

    // Interior indices run 0..Nx-1 / 0..Ny-1; ghosts use negative and >= N.
    ConservedState at(int i, int j = 0) const {
        const std::size_t n = idx(i, j);
        return {comp_[0][n], comp_[1][n], comp_[2][n],
                comp_[3][n], comp_[4][n], comp_[5][n]};
    }
    void set(int i, int j, const ConservedState& u) {
        const std::size_t n = idx(i, j);
        comp_[0][n] = u.h;
        comp_[1][n] = u.m1;
        comp_[2][n] = u.m2;
        comp_[3][n] = u.E11;
        comp_[4][n] = u.E12;
        comp_[5][n] = u.E22;
    }
    void set(int i, const ConservedState& u) { set(i, 0, u); }

    double component(int k, int i, int j = 0) const { return comp_[k][idx(i, j)]; }
    double& component(int k, int i, int j = 0) { return comp_[k][idx(i, j)]; }

    void fill_ghosts(const BoundaryCondition& bc);

  private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(j + mesh_.ghost) * stride_ +
               static_cast<std::size_t>(i + mesh_.ghost);
    }

    Mesh mesh_;
    std::size_t stride_ = 0;
    std::array<std::vector<double>, 6> comp_;
};

// Central difference of order 2 or 4 on a padded row.
// values holds n + 2*ghost entries; out receives the n interior derivatives.
void central_diff(std::span<const double> values, int ghost, int order,
                  double spacing, std::span<double> out);

}  // namespace ssw
