#include "ssw/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace ssw {

namespace {

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << std::setprecision(17);
    return out;
}

}  // namespace

double l1_error(const GridField& u, const CaseSpec& c, double t, int component) {
    if (!c.exact) throw std::invalid_argument("case has no exact solution: " + c.name);
    const Mesh& mesh = u.mesh();
    const int ny = mesh.dim == 2 ? mesh.Ny : 1;
    double sum = 0;
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < mesh.Nx; ++i) {
            const Vec6 exact =
                prim_to_cons(c.exact(mesh.xc(i), mesh.yc(j), t)).as_vec();
            sum += std::abs(u.at(i, j).as_vec()[component] - exact[component]);
        }
    return sum * mesh.cell_measure();
}

void convergence_orders(std::vector<ConvergenceRow>& rows) {
    for (std::size_t k = 1; k < rows.size(); ++k)
        rows[k].order = std::log2(rows[k - 1].l1_error / rows[k].l1_error);
}

double total_entropy(const GridField& u) {
    const Mesh& mesh = u.mesh();
    const int ny = mesh.dim == 2 ? mesh.Ny : 1;
    double sum = 0;
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < mesh.Nx; ++i) sum += entropy(u.at(i, j)).eta;
    return sum * mesh.cell_measure();
}

double total_mass(const GridField& u) {
    const Mesh& mesh = u.mesh();
    const int ny = mesh.dim == 2 ? mesh.Ny : 1;
    double sum = 0;
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < mesh.Nx; ++i) sum += u.at(i, j).h;
    return sum * mesh.cell_measure();
}

void write_csv(const GridField& u, const std::string& path) {
    std::ofstream out = open_output(path);
    const Mesh& mesh = u.mesh();
    const int ny = mesh.dim == 2 ? mesh.Ny : 1;
    out << (mesh.dim == 2 ? "x,y,h,v1,v2,P11,P12,P22\n" : "x,h,v1,v2,P11,P12,P22\n");
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < mesh.Nx; ++i) {
            const PrimitiveState w = cons_to_prim(u.at(i, j));
            out << mesh.xc(i) << ',';
            if (mesh.dim == 2) out << mesh.yc(j) << ',';
            out << w.h << ',' << w.v1 << ',' << w.v2 << ',' << w.P11 << ','
                << w.P12 << ',' << w.P22 << '\n';
        }
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_vtk(const GridField& u, const std::string& path) {
    std::ofstream out = open_output(path);
    const Mesh& mesh = u.mesh();
    const int ny = mesh.dim == 2 ? mesh.Ny : 1;
    out << "# vtk DataFile Version 3.0\n"
        << "shear shallow water solution\n"
        << "ASCII\n"
        << "DATASET STRUCTURED_POINTS\n"
        << "DIMENSIONS " << mesh.Nx << ' ' << ny << " 1\n"
        << "ORIGIN " << mesh.xc(0) << ' ' << mesh.yc(0) << " 0\n"
        << "SPACING " << mesh.dx() << ' ' << (mesh.dim == 2 ? mesh.dy() : 1.0)
        << " 1\n"
        << "POINT_DATA " << static_cast<long>(mesh.Nx) * ny << '\n';
    static const char* names[6] = {"h", "v1", "v2", "P11", "P12", "P22"};
    for (int k = 0; k < 6; ++k) {
        out << "SCALARS " << names[k] << " double 1\nLOOKUP_TABLE default\n";
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < mesh.Nx; ++i) {
                const PrimitiveState w = cons_to_prim(u.at(i, j));
                const double vals[6] = {w.h, w.v1, w.v2, w.P11, w.P12, w.P22};
                out << vals[k] << '\n';
            }
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_entropy_series(const std::vector<EntropySample>& series,
                          const std::string& path) {
    std::ofstream out = open_output(path);
    out << "t,entropy\n";
    for (const auto& s : series) out << s.t << ',' << s.entropy << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

SampledSolution read_solution_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open solution file: " + path);
    SampledSolution s;
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error("empty solution file: " + path);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string cell;
        double vals[7];
        for (int k = 0; k < 7; ++k) {
            if (!std::getline(row, cell, ','))
                throw std::runtime_error("short row in " + path + ": " + line);
            vals[k] = std::stod(cell);
        }
        s.x.push_back(vals[0]);
        for (int k = 0; k < 6; ++k) s.cols[k].push_back(vals[k + 1]);
    }
    if (s.x.size() < 2) throw std::runtime_error("too few samples in " + path);
    return s;
}

PrimitiveState SampledSolution::eval(double xq) const {
    const auto n = x.size();
    const auto hi =
        std::upper_bound(x.begin(), x.end(), xq) - x.begin();
    const std::size_t i1 = std::clamp<std::size_t>(hi, 1, n - 1);
    const std::size_t i0 = i1 - 1;
    const double w = std::clamp((xq - x[i0]) / (x[i1] - x[i0]), 0.0, 1.0);
    double out[6];
    for (int k = 0; k < 6; ++k)
        out[k] = (1 - w) * cols[k][i0] + w * cols[k][i1];
    return {out[0], out[1], out[2], out[3], out[4], out[5]};
}

}  // namespace ssw
