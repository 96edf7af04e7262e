#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ssw/cases.hpp"
#include "ssw/diagnostics.hpp"
#include "ssw/dissipation.hpp"
#include "ssw/ec_flux.hpp"
#include "ssw/physics.hpp"
#include "ssw/reconstruct.hpp"
#include "ssw/sampling.hpp"
#include "ssw/solver.hpp"

namespace {

using nlohmann::json;

int scheme_order(const std::string& scheme) {
    if (scheme == "o1") return 1;
    if (scheme == "o2") return 2;
    if (scheme == "o3") return 3;
    if (scheme == "o4") return 4;
    throw CLI::ValidationError("--scheme", "must be one of o1, o2, o3, o4");
}

// Simple key=value config file; '#' starts a comment.
std::map<std::string, std::string> load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t");
            const auto e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (!key.empty()) kv[key] = val;
    }
    return kv;
}

struct RunOptions {
    std::string case_name;
    std::string scheme = "o2";
    int n = 0;   // 0 -> case default
    int ny = 0;  // 0 -> case default
    double cfl = 0.45;
    double tend = -1;  // <0 -> case default
    std::string out_dir = ".";
    std::string config_path;
    bool cfl_set = false, tend_set = false, n_set = false, ny_set = false;
};

// Applies config-file values for options the command line did not set
// (precedence: case defaults < config file < flags).
void apply_config(RunOptions& o) {
    if (o.config_path.empty()) return;
    const auto kv = load_config(o.config_path);
    auto get = [&](const char* key) -> const std::string* {
        const auto it = kv.find(key);
        return it == kv.end() ? nullptr : &it->second;
    };
    if (const auto* v = get("case"); v && o.case_name.empty()) o.case_name = *v;
    if (const auto* v = get("scheme"); v && o.scheme == "o2") o.scheme = *v;
    if (const auto* v = get("n"); v && !o.n_set) o.n = std::stoi(*v);
    if (const auto* v = get("ny"); v && !o.ny_set) o.ny = std::stoi(*v);
    if (const auto* v = get("cfl"); v && !o.cfl_set) {
        o.cfl = std::stod(*v);
        o.cfl_set = true;
    }
    if (const auto* v = get("tend"); v && !o.tend_set) o.tend = std::stod(*v);
    if (const auto* v = get("out-dir"); v && o.out_dir == ".") o.out_dir = *v;
}

int cmd_run(RunOptions o) {
    apply_config(o);
    ssw::CaseSpec spec = ssw::find_case(o.case_name);
    const int order = scheme_order(o.scheme);
    const int nx = o.n > 0 ? o.n : spec.default_nx;
    const int ny = o.ny > 0 ? o.ny : spec.default_ny;
    ssw::SchemeConfig cfg;
    cfg.order = order;
    cfg.cfl = o.cfl_set ? o.cfl : spec.default_cfl;
    cfg.end_time = o.tend >= 0 ? o.tend : spec.end_time;
    cfg.source_enabled = spec.source_enabled;

    std::filesystem::create_directories(o.out_dir);
    const std::string stem = o.out_dir + "/" + spec.name + "_" + o.scheme + "_" +
                             std::to_string(nx);

    ssw::Solver solver(spec, cfg, nx, ny);
    std::vector<ssw::EntropySample> series;
    const ssw::RunResult res =
        solver.run([&](int, double t, const ssw::GridField& u) {
            series.push_back({t, ssw::total_entropy(u)});
        });

    ssw::write_csv(solver.state(), stem + ".csv");
    ssw::write_vtk(solver.state(), stem + ".vtk");
    ssw::write_entropy_series(series, stem + "_entropy.csv");

    json manifest = {
        {"case", spec.name},       {"scheme", o.scheme},
        {"order", order},          {"n", nx},
        {"ny", solver.mesh().Ny},  {"dim", spec.dim},
        {"cfl", cfg.cfl},          {"tend", cfg.end_time},
        {"g", spec.params.g},      {"C_f", spec.params.C_f},
        {"C_r", spec.params.C_r},  {"phi", spec.params.phi},
        {"theta", spec.params.theta},
        {"source_enabled", cfg.source_enabled},
        {"steps", res.steps},      {"final_time", res.time},
        {"outputs", {stem + ".csv", stem + ".vtk", stem + "_entropy.csv"}}};
    std::ofstream mf(stem + "_manifest.json");
    mf << manifest.dump(2) << '\n';

    std::cout << spec.name << ": " << res.steps << " steps to t = " << res.time
              << ", outputs at " << stem << ".{csv,vtk}\n";
    if (spec.exact)
        std::cout << "L1(h) error vs exact: "
                  << ssw::l1_error(solver.state(), spec, res.time) << '\n';
    return 0;
}

int cmd_converge(RunOptions o, std::vector<int> ns) {
    apply_config(o);
    ssw::CaseSpec spec = ssw::find_case(o.case_name);
    if (!spec.exact) {
        std::cerr << "case " << spec.name << " has no exact solution\n";
        return 2;
    }
    const int order = scheme_order(o.scheme);
    std::vector<ssw::ConvergenceRow> rows;
    for (int n : ns) {
        ssw::SchemeConfig cfg;
        cfg.order = order;
        cfg.cfl = o.cfl_set ? o.cfl : spec.default_cfl;
        cfg.end_time = o.tend >= 0 ? o.tend : spec.end_time;
        cfg.source_enabled = spec.source_enabled;
        ssw::Solver solver(spec, cfg, n, n);
        const ssw::RunResult res = solver.run();
        rows.push_back({n, ssw::l1_error(solver.state(), spec, res.time), 0});
    }
    ssw::convergence_orders(rows);

    std::filesystem::create_directories(o.out_dir);
    const std::string path =
        o.out_dir + "/" + spec.name + "_" + o.scheme + "_convergence.csv";
    std::ofstream out(path);
    out << std::setprecision(17) << "N,l1_error,order\n";
    std::printf("%8s %14s %8s\n", "N", "L1(h)", "order");
    for (std::size_t k = 0; k < rows.size(); ++k) {
        out << rows[k].N << ',' << rows[k].l1_error << ',' << rows[k].order << '\n';
        if (k == 0)
            std::printf("%8d %14.6e %8s\n", rows[k].N, rows[k].l1_error, "-");
        else
            std::printf("%8d %14.6e %8.3f\n", rows[k].N, rows[k].l1_error,
                        rows[k].order);
    }
    std::cout << "table written to " << path << '\n';
    return 0;
}

struct CheckReport {
    int pass = 0;
    int fail = 0;
    double worst = 0;
};

void report(const char* name, const CheckReport& r) {
    std::printf("%-28s %s  (%d/%d, worst residual %.3e)\n", name,
                r.fail == 0 ? "PASS" : "FAIL", r.pass, r.pass + r.fail, r.worst);
}

int cmd_verify(std::uint64_t seed, int trials) {
    std::cout << "randomized invariant suite, seed = " << seed << '\n';
    bool all_ok = true;

    {  // Tadmor jump identity of the entropy conservative flux, x and y.
        std::mt19937_64 rng(seed);
        CheckReport r;
        for (int k = 0; k < trials; ++k) {
            const ssw::PrimitiveState wL = ssw::random_admissible(rng);
            const ssw::PrimitiveState wR = ssw::random_admissible(rng);
            const ssw::ConservedState uL = ssw::prim_to_cons(wL);
            const ssw::ConservedState uR = ssw::prim_to_cons(wR);
            const ssw::Vec6 dV =
                ssw::entropy_vars(uR).V - ssw::entropy_vars(uL).V;
            const auto psiL = ssw::entropy_potential(uL);
            const auto psiR = ssw::entropy_potential(uR);
            const double rx = std::abs(dot(dV, ssw::ec_flux_x(uL, uR)) -
                                       (psiR.psi_x - psiL.psi_x)) /
                              (1 + std::abs(psiR.psi_x - psiL.psi_x));
            const double ry = std::abs(dot(dV, ssw::ec_flux_y(uL, uR)) -
                                       (psiR.psi_y - psiL.psi_y)) /
                              (1 + std::abs(psiR.psi_y - psiL.psi_y));
            const double res = std::max(rx, ry);
            r.worst = std::max(r.worst, res);
            (res < 1e-11 ? r.pass : r.fail)++;
        }
        report("EC flux jump identity", r);
        all_ok = all_ok && r.fail == 0;
    }

    {  // Entropy variable gradient: V = d(eta)/dU by central differences.
        std::mt19937_64 rng(seed + 1);
        CheckReport r;
        for (int k = 0; k < trials; ++k) {
            const ssw::ConservedState u =
                ssw::prim_to_cons(ssw::random_admissible(rng));
            const ssw::Vec6 V = ssw::entropy_vars(u).V;
            double worst = 0;
            for (int c = 0; c < 6; ++c) {
                ssw::Vec6 up = u.as_vec(), um = u.as_vec();
                const double eps = 1e-6 * std::max(std::abs(up[c]), u.h);
                up[c] += eps;
                um[c] -= eps;
                const double fd =
                    (ssw::entropy(ssw::ConservedState::from_vec(up)).eta -
                     ssw::entropy(ssw::ConservedState::from_vec(um)).eta) /
                    (2 * eps);
                worst = std::max(worst,
                                 std::abs(fd - V[c]) / (1 + std::abs(V[c])));
            }
            r.worst = std::max(r.worst, worst);
            (worst < 1e-5 ? r.pass : r.fail)++;
        }
        report("entropy variable gradient", r);
        all_ok = all_ok && r.fail == 0;
    }

    {  // Orthogonality V . B^x = V . B^y = 0.
        std::mt19937_64 rng(seed + 2);
        CheckReport r;
        for (int k = 0; k < trials; ++k) {
            const ssw::ConservedState u =
                ssw::prim_to_cons(ssw::random_admissible(rng));
            const ssw::Vec6 V = ssw::entropy_vars(u).V;
            const double g = 9.81;
            const double res =
                std::max(std::abs(dot(V, ssw::noncons_x(u, g))),
                         std::abs(dot(V, ssw::noncons_y(u, g)))) /
                (1 + g * u.h * u.h);
            r.worst = std::max(r.worst, res);
            (res < 1e-12 ? r.pass : r.fail)++;
        }
        report("V . B orthogonality", r);
        all_ok = all_ok && r.fail == 0;
    }

    {  // Barth scaling: R~ R~^T = dU/dV by finite differences of the V->U map.
        std::mt19937_64 rng(seed + 3);
        CheckReport r;
        for (int k = 0; k < trials; ++k) {
            const ssw::PrimitiveState w = ssw::random_admissible(rng);
            const ssw::ScaledEigen e = ssw::scaled_eigensystem_x(w, 9.81);
            const ssw::Mat6 H = e.R_tilde * e.R_tilde.transposed();
            const ssw::Vec6 V0 = ssw::entropy_vars(ssw::prim_to_cons(w)).V;
            const double uscale = ssw::prim_to_cons(w).as_vec().max_abs();
            auto jac_col = [&](int c, double eps) {
                ssw::Vec6 Vp = V0, Vm = V0;
                Vp[c] += eps;
                Vm[c] -= eps;
                const ssw::Vec6 up = ssw::cons_from_entropy_vars(Vp).as_vec();
                const ssw::Vec6 um = ssw::cons_from_entropy_vars(Vm).as_vec();
                ssw::Vec6 col;
                for (int rr = 0; rr < 6; ++rr)
                    col[rr] = (up[rr] - um[rr]) / (2 * eps);
                return col;
            };
            ssw::Mat6 J;
            for (int c = 0; c < 6; ++c) {
                // Pick eps so the state moves by ~1e-4 relative, then use
                // Richardson extrapolation to cancel the O(eps^2) error.
                double eps = 1e-4 * (std::abs(V0[c]) + 0.01 * V0.max_abs());
                const ssw::Vec6 probe = jac_col(c, eps);
                const double sens = probe.max_abs() / uscale;
                if (sens > 0) eps = std::min(eps, 1e-3 / sens);
                const ssw::Vec6 c1 = jac_col(c, eps);
                const ssw::Vec6 c2 = jac_col(c, eps / 2);
                for (int rr = 0; rr < 6; ++rr)
                    J(rr, c) = (4 * c2[rr] - c1[rr]) / 3;
            }
            ssw::Mat6 Dm = H;
            for (int q = 0; q < 36; ++q) Dm.m[q] -= J.m[q];
            const double res = Dm.max_abs() / H.max_abs();
            r.worst = std::max(r.worst, res);
            (res < 1e-9 ? r.pass : r.fail)++;
        }
        report("scaling identity (FD)", r);
        all_ok = all_ok && r.fail == 0;
    }

    {  // Sign property of the reconstructed jumps, all orders.
        std::mt19937_64 rng(seed + 4);
        std::uniform_real_distribution<double> val(-1.0, 1.0);
        CheckReport r;
        for (int k = 0; k < trials; ++k) {
            for (int order = 1; order <= 4; ++order) {
                const int w = ssw::reconstruction_width(order);
                std::vector<ssw::Vec6> z(2 * w);
                for (auto& zc : z)
                    for (int c = 0; c < 6; ++c) zc[c] = val(rng);
                const ssw::Vec6 jump = ssw::reconstructed_jump(z, order);
                bool ok = true;
                for (int c = 0; c < 6; ++c) {
                    const double raw = z[w][c] - z[w - 1][c];
                    // Roundoff slack: exact arithmetic gives jump * raw >= 0.
                    if (jump[c] * raw <
                        -1e-12 * (raw * raw + jump[c] * jump[c]))
                        ok = false;
                }
                (ok ? r.pass : r.fail)++;
            }
        }
        report("reconstruction sign property", r);
        all_ok = all_ok && r.fail == 0;
    }

    std::cout << (all_ok ? "all checks passed\n" : "FAILURES detected\n");
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entropy stable finite difference solver for the shear "
                 "shallow water model"};
    app.require_subcommand(1);

    RunOptions o;
    std::vector<int> ns;
    std::uint64_t seed = 20260824;
    int trials = 10000;

    auto add_common = [&](CLI::App* cmd, bool need_case) {
        auto* c = cmd->add_option("--case", o.case_name, "test case name");
        if (need_case) c->required();
        cmd->add_option("--scheme", o.scheme, "scheme: o1, o2, o3, o4");
        cmd->add_option("--cfl", o.cfl, "CFL number")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--tend", o.tend, "override final time");
        cmd->add_option("--out-dir", o.out_dir, "output directory");
        cmd->add_option("--config", o.config_path, "key=value config file");
    };

    auto* run = app.add_subcommand("run", "run one case and write outputs");
    add_common(run, true);
    run->add_option("--n", o.n, "cells in x")->check(CLI::PositiveNumber);
    run->add_option("--ny", o.ny, "cells in y (2D cases)")
        ->check(CLI::PositiveNumber);

    auto* conv = app.add_subcommand("converge", "convergence study vs exact");
    add_common(conv, true);
    conv->add_option("--n", ns, "resolution list")->required();

    auto* verify =
        app.add_subcommand("verify", "randomized invariant checks");
    verify->add_option("--seed", seed, "RNG seed");
    verify->add_option("--trials", trials, "samples per check")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (run->parsed()) {
            o.n_set = run->count("--n") > 0;
            o.ny_set = run->count("--ny") > 0;
            o.cfl_set = run->count("--cfl") > 0;
            o.tend_set = run->count("--tend") > 0;
            return cmd_run(o);
        }
        if (conv->parsed()) {
            o.cfl_set = conv->count("--cfl") > 0;
            o.tend_set = conv->count("--tend") > 0;
            return cmd_converge(o, ns);
        }
        return cmd_verify(seed, trials);
    } catch (const ssw::SolverAbort& e) {
        std::cerr << "solver abort: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
