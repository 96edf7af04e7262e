#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ssw/cases.hpp"
#include "ssw/grid.hpp"
#include "ssw/rk.hpp"
#include "ssw/state.hpp"

namespace ssw {

struct SchemeConfig {
    int order = 2;      // 1..4, selects flux / reconstruction / integrator together
    double cfl = 0.45;
    double end_time = 0.5;
    bool source_enabled = false;
};

// Ghost layers needed by the widest stencil of each scheme order.
constexpr int required_ghost(int order) { return order <= 2 ? 2 : order; }

// Central-difference order used for the depth gradient in the
// non-conservative terms.
constexpr int depth_diff_order(int order) { return order <= 2 ? 2 : 4; }

// Raised when a time step produces an inadmissible or non-finite cell.
class SolverAbort : public std::runtime_error {
  public:
    explicit SolverAbort(const std::string& what) : std::runtime_error(what) {}
};

struct RunResult {
    double time = 0;
    int steps = 0;
};

// Explicit finite-difference solver: entropy stable interface fluxes,
// central-difference non-conservative terms, pointwise sources, SSP-RK
// time stepping.
class Solver {
  public:
    Solver(CaseSpec c, SchemeConfig cfg, int nx, int ny = 1);

    const Mesh& mesh() const { return u_.mesh(); }
    const GridField& state() const { return u_; }
    GridField& state() { return u_; }
    double time() const { return t_; }
    const CaseSpec& spec() const { return case_; }
    const SchemeConfig& config() const { return cfg_; }

    // CFL time step from the current state (not capped by end_time).
    double compute_dt() const;

    // Semi-discrete right-hand side at time t. Fills ghosts of u.
    void eval_rhs(GridField& u, double t, GridField& out) const;

    // One SSP-RK step of size dt at the current time.
    void advance(double dt);

    // Advance to end_time; the observer (if given) sees the state after
    // every accepted step, and once with step 0 at t = 0.
    RunResult run(const std::function<void(int step, double t, const GridField&)>&
                      observer = {});

  private:
    void validate(const GridField& u, double t, int stage) const;

    CaseSpec case_;
    SchemeConfig cfg_;
    GridField u_;
    double t_ = 0;
    std::vector<GridField> stage_u_;
    std::vector<GridField> stage_r_;
};

}  // namespace ssw
