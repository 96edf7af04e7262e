#pragma once

#include <string>
#include <vector>

#include "ssw/cases.hpp"
#include "ssw/grid.hpp"

namespace ssw {

// L1 error of one conserved component against the exact solution sampled at
// cell centers: sum |u_i - u_exact(x_i, t)| * dx (* dy in 2D). Component 0
// is the water depth.
double l1_error(const GridField& u, const CaseSpec& c, double t, int component = 0);

struct ConvergenceRow {
    int N = 0;
    double l1_error = 0;
    double order = 0;  // log2 ratio vs the previous row; 0 on the first row
};

// Fills the order column: order_k = log2(e_{k-1} / e_k).
void convergence_orders(std::vector<ConvergenceRow>& rows);

// Total mathematical entropy sum eta * dx (* dy), fixed sequential reduction.
double total_entropy(const GridField& u);

// Total water mass sum h * dx (* dy), fixed sequential reduction.
double total_mass(const GridField& u);

struct EntropySample {
    double t;
    double entropy;
};

// Final-field writers. CSV columns: x[, y], h, v1, v2, P11, P12, P22 with
// 17 significant digits; VTK is legacy structured-points ASCII.
void write_csv(const GridField& u, const std::string& path);
void write_vtk(const GridField& u, const std::string& path);
void write_entropy_series(const std::vector<EntropySample>& series,
                          const std::string& path);

// Reads a solution CSV written by write_csv (1D layout) and evaluates it at x
// by piecewise-linear interpolation of each primitive column.
struct SampledSolution {
    std::vector<double> x;
    std::array<std::vector<double>, 6> cols;  // h, v1, v2, P11, P12, P22

    PrimitiveState eval(double xq) const;
};
SampledSolution read_solution_csv(const std::string& path);

}  // namespace ssw
