#include "ssw/solver.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "ssw/dissipation.hpp"
#include "ssw/parallel.hpp"
#include "ssw/physics.hpp"

namespace ssw {

Solver::Solver(CaseSpec c, SchemeConfig cfg, int nx, int ny)
    : case_(std::move(c)), cfg_(cfg) {
    const Mesh mesh = make_mesh(case_, nx, ny, required_ghost(cfg_.order));
    u_ = initialize(case_, mesh);
    const RkTableau& tab = RkTableau::get(cfg_.order);
    stage_u_.assign(tab.stages.size() + 1, GridField(mesh));
    stage_r_.assign(tab.stages.size(), GridField(mesh));
}

double Solver::compute_dt() const {
    const Mesh& mesh = u_.mesh();
    const double g = case_.params.g;
    const int ny = mesh.dim == 2 ? mesh.Ny : 1;
    double smax = 0;
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < mesh.Nx; ++i) {
            const PrimitiveState w = cons_to_prim(u_.at(i, j));
            double s = max_speed_x(w, g) / mesh.dx();
            if (mesh.dim == 2) s += max_speed_y(w, g) / mesh.dy();
            smax = std::max(smax, s);
        }
    return cfg_.cfl / smax;
}

void Solver::eval_rhs(GridField& u, double t, GridField& out) const {
    const Mesh& mesh = u.mesh();
    const int nx = mesh.Nx;
    const int ny = mesh.dim == 2 ? mesh.Ny : 1;
    const int ghost = mesh.ghost;
    const double g = case_.params.g;
    const int order = cfg_.order;
    const int diff_order = depth_diff_order(order);

    u.fill_ghosts(case_.bc);

    // x-direction sweep plus all cell-local terms, parallel over rows.
    parallel_for(ny, [&](int jb, int je) {
        std::vector<ConservedState> row(nx + 2 * ghost);
        std::vector<double> hvals(nx + 2 * ghost), dh(nx);
        std::vector<Vec6> faces(nx + 1);
        for (int j = jb; j < je; ++j) {
            for (int c = 0; c < nx + 2 * ghost; ++c) row[c] = u.at(c - ghost, j);
            es_flux_row_x(row, ghost, order, g, faces);
            for (int c = 0; c < nx + 2 * ghost; ++c) hvals[c] = row[c].h;
            central_diff(hvals, ghost, diff_order, mesh.dx(), dh);

            const double y = mesh.yc(j);
            for (int i = 0; i < nx; ++i) {
                const ConservedState& uij = row[i + ghost];
                Vec6 r = (1.0 / mesh.dx()) * (faces[i] - faces[i + 1]);
                r -= dh[i] * noncons_x(uij, g);
                if (cfg_.source_enabled) {
                    const double x = mesh.xc(i);
                    const double bx = case_.db_dx ? case_.db_dx(x, y) : 0.0;
                    const double by = case_.db_dy ? case_.db_dy(x, y) : 0.0;
                    r += source(uij, bx, by, case_.params);
                }
                if (case_.forcing) r += case_.forcing(mesh.xc(i), y, t);
                out.set(i, j, ConservedState::from_vec(r));
            }
        }
    });

    if (mesh.dim != 2) return;

    // y-direction sweep via the x-direction kernel on swapped states,
    // parallel over columns.
    parallel_for(nx, [&](int ib, int ie) {
        std::vector<ConservedState> col(ny + 2 * ghost);
        std::vector<double> hvals(ny + 2 * ghost), dh(ny);
        std::vector<Vec6> faces(ny + 1);
        for (int i = ib; i < ie; ++i) {
            for (int c = 0; c < ny + 2 * ghost; ++c)
                col[c] = swap_xy(u.at(i, c - ghost));
            es_flux_row_x(col, ghost, order, g, faces);
            for (int c = 0; c < ny + 2 * ghost; ++c) hvals[c] = col[c].h;
            central_diff(hvals, ghost, diff_order, mesh.dy(), dh);

            for (int j = 0; j < ny; ++j) {
                Vec6 r = out.at(i, j).as_vec();
                r += (1.0 / mesh.dy()) * swap_xy(faces[j] - faces[j + 1]);
                r -= dh[j] * noncons_y(u.at(i, j), g);
                out.set(i, j, ConservedState::from_vec(r));
            }
        }
    });
}

void Solver::validate(const GridField& u, double t, int stage) const {
    const Mesh& mesh = u.mesh();
    const int ny = mesh.dim == 2 ? mesh.Ny : 1;
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < mesh.Nx; ++i) {
            const ConservedState s = u.at(i, j);
            std::string reason;
            if (!s.as_vec().finite()) {
                reason = "non-finite state";
            } else {
                try {
                    cons_to_prim(s);
                } catch (const AdmissibilityError& e) {
                    reason = e.what();
                }
            }
            if (!reason.empty()) {
                std::ostringstream msg;
                msg << reason << " at cell (" << i << ", " << j << "), t = " << t
                    << ", RK stage " << stage << "; state = (";
                const Vec6 v = s.as_vec();
                for (int k = 0; k < 6; ++k) msg << (k ? ", " : "") << v[k];
                msg << ")";
                throw SolverAbort(msg.str());
            }
        }
}

void Solver::advance(double dt) {
    const RkTableau& tab = RkTableau::get(cfg_.order);
    const Mesh& mesh = u_.mesh();
    const int nx = mesh.Nx;
    const int ny = mesh.dim == 2 ? mesh.Ny : 1;

    stage_u_[0] = u_;
    int computed = 0;
    for (std::size_t k = 0; k < tab.stages.size(); ++k) {
        const auto& st = tab.stages[k];
        for (const auto& term : st.delta)
            while (computed <= term.l) {
                eval_rhs(stage_u_[computed], t_ + tab.stage_times[computed] * dt,
                         stage_r_[computed]);
                ++computed;
            }
        GridField& next = stage_u_[k + 1];
        parallel_for(ny, [&](int jb, int je) {
            for (int j = jb; j < je; ++j)
                for (int i = 0; i < nx; ++i) {
                    Vec6 acc{};
                    for (const auto& term : st.gamma)
                        acc += term.w * stage_u_[term.l].at(i, j).as_vec();
                    for (const auto& term : st.delta)
                        acc += (term.w * dt) * stage_r_[term.l].at(i, j).as_vec();
                    next.set(i, j, ConservedState::from_vec(acc));
                }
        });
        validate(next, t_, static_cast<int>(k) + 1);
    }
    u_ = stage_u_.back();
    t_ += dt;
}

RunResult Solver::run(
    const std::function<void(int step, double t, const GridField&)>& observer) {
    RunResult res;
    if (observer) observer(0, t_, u_);
    const double end = cfg_.end_time;
    while (t_ < end * (1 - 1e-14)) {
        double dt = compute_dt();
        if (t_ + dt > end) dt = end - t_;
        advance(dt);
        ++res.steps;
        if (observer) observer(res.steps, t_, u_);
    }
    res.time = t_;
    return res;
}

}  // namespace ssw
