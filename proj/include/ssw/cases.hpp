#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ssw/grid.hpp"
#include "ssw/state.hpp"
#include "ssw/vec6.hpp"

namespace ssw {

// Declarative description of a test problem.
struct CaseSpec {
    std::string name;
    int dim = 1;
    double xa = -0.5, xb = 0.5, ya = 0, yb = 1;
    int default_nx = 500, default_ny = 1;
    BoundaryCondition bc;
    double end_time = 0.5;
    double default_cfl = 0.45;
    ModelParams params;
    bool source_enabled = false;

    std::function<PrimitiveState(double x, double y)> ic;
    std::function<Vec6(double x, double y, double t)> forcing;           // optional
    std::function<PrimitiveState(double x, double y, double t)> exact;   // optional
    std::function<double(double x, double y)> db_dx;                     // optional
    std::function<double(double x, double y)> db_dy;                     // optional
    std::string reference_path;                                          // optional CSV
};

enum class DamBreakVariant { P12Zero, P12Eps };

CaseSpec case_accuracy_1d();
CaseSpec case_dam_break(DamBreakVariant variant = DamBreakVariant::P12Zero);
CaseSpec case_five_wave();
CaseSpec case_shear();
CaseSpec case_single_shock();
CaseSpec case_roll_wave_1d(int which);  // 1 or 2
CaseSpec case_roll_wave_2d();
CaseSpec case_accuracy_2d();

// Case registry for the CLI.
std::vector<std::string> case_names();
CaseSpec find_case(const std::string& name);

// Samples the initial condition at cell centers (Riemann data is assigned by
// cell-center position, no smoothing).
GridField initialize(const CaseSpec& c, const Mesh& mesh);

// Mesh for a case at the given resolution, with ghosts sized for the order.
Mesh make_mesh(const CaseSpec& c, int nx, int ny, int ghost);

}  // namespace ssw
