// Python surface for the braiding-gate library. Matrices cross the boundary
// as nested lists of complex numbers; kets as flat lists of four amplitudes.

#include "ybg/cyclic.hpp"
#include "ybg/gates.hpp"
#include "ybg/matrix.hpp"
#include "ybg/physics.hpp"
#include "ybg/ybe.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <vector>

namespace py = pybind11;
using namespace ybg;

namespace {

using PyMatrix = std::vector<std::vector<cxd>>;

PyMatrix to_py(const Mat &m) {
    PyMatrix out(m.rows(), std::vector<cxd>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[i][j] = m(i, j);
    return out;
}

Mat from_py(const PyMatrix &rows) {
    if (rows.empty())
        throw std::invalid_argument("matrix must be non-empty");
    const std::size_t cols = rows[0].size();
    Mat m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw std::invalid_argument("matrix rows must have equal length");
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

Ket4 ket_from_py(const std::vector<cxd> &amp) {
    if (amp.size() != 4)
        throw std::invalid_argument("ket must have four amplitudes");
    return Ket4::normalized({amp[0], amp[1], amp[2], amp[3]});
}

} // namespace

PYBIND11_MODULE(_ybgates, m) {
    m.doc() = "Yang-Baxter braiding gates from cyclic groups";

    // gate constructors
    m.def("bn_gate", [](int n) { return to_py(build_gate(BnParams{n})); },
          py::arg("n"));
    m.def("bnphi_gate",
          [](int n, double phi) {
              return to_py(build_gate(BnPhiParams{n, phi}));
          },
          py::arg("n"), py::arg("phi"));
    m.def("general_gate",
          [](cxd alpha, cxd beta, cxd q) {
              return to_py(build_gate(GeneralParams{alpha, beta, q}));
          },
          py::arg("alpha"), py::arg("beta"), py::arg("q"));
    m.def("continuous_gate",
          [](double t, double theta, double phi) {
              return to_py(build_gate(ContinuousParams{t, theta, phi}));
          },
          py::arg("t"), py::arg("theta"), py::arg("phi"));
    m.def("graded_gate",
          [](int n, int d0, int d1) {
              return to_py(build_gate(GradedParams{n, d0, d1}));
          },
          py::arg("n"), py::arg("d0"), py::arg("d1"));
    m.def("barenco_gate",
          [](double alpha, double theta, double phi) {
              return to_py(build_gate(BarencoParams{alpha, theta, phi}));
          },
          py::arg("alpha"), py::arg("theta"), py::arg("phi"));
    m.def("swap_gate", [] { return to_py(swap_gate()); });
    m.def("braid_rtheta",
          [](double theta, double phi) {
              return to_py(braid_rtheta(theta, phi));
          },
          py::arg("theta"), py::arg("phi"));

    // cyclic-group constructions
    m.def("r_closed_form",
          [](int n) { return to_py(r_closed_form(n)); }, py::arg("n"));
    m.def("r_bruteforce",
          [](int n) { return to_py(r_bruteforce(n)); }, py::arg("n"));
    m.def("rotation_rep",
          [](int n, int a) { return to_py(rotation_rep(n, a)); },
          py::arg("n"), py::arg("a"));

    // verification
    m.def("braided_ybe_residual",
          [](const PyMatrix &g) { return braided_ybe_residual(from_py(g)); },
          py::arg("gate"));
    m.def("algebraic_ybe_residual",
          [](const PyMatrix &g) {
              return algebraic_ybe_residual(from_py(g));
          },
          py::arg("gate"));
    m.def("unitarity_residual",
          [](const PyMatrix &g) { return unitarity_residual(from_py(g)); },
          py::arg("gate"));
    m.def("q_conjugate",
          [](const PyMatrix &g, double phi) {
              return to_py(q_conjugate(from_py(g), phi));
          },
          py::arg("gate"), py::arg("phi"));
    m.def("graded_entangling_condition", &graded_entangling_condition,
          py::arg("n"), py::arg("d0"), py::arg("d1"));
    m.def("is_entangling",
          [](const PyMatrix &g, int samples, double tol, std::uint64_t seed) {
              return is_entangling(from_py(g), samples, tol, seed).entangling;
          },
          py::arg("gate"), py::arg("samples") = 2000, py::arg("tol") = 1e-10,
          py::arg("seed") = 0);

    // baxterization
    m.def("normalized_rx",
          [](int n, double phi, double x) {
              return to_py(normalized_rx(n, phi, x));
          },
          py::arg("n"), py::arg("phi"), py::arg("x"));
    m.def("rho", &rho, py::arg("n"), py::arg("x"));
    m.def("theta_of", &theta_of, py::arg("n"), py::arg("x"));

    // physics
    m.def("concurrence",
          [](const std::vector<cxd> &amp) {
              return concurrence(ket_from_py(amp));
          },
          py::arg("ket"));
    m.def("hamiltonian_phi",
          [](double theta, double phi, double phidot) {
              return to_py(hamiltonian_phi(theta, phi, phidot).matrix);
          },
          py::arg("theta"), py::arg("phi"), py::arg("phidot"));
    m.def("hamiltonian_theta",
          [](double thetadot, double phi) {
              return to_py(hamiltonian_theta(thetadot, phi).matrix);
          },
          py::arg("thetadot"), py::arg("phi"));
    m.def("berry_phase",
          [](double theta, const std::string &branch, std::int64_t steps) {
              const auto r = berry_phase(theta,
                                         branch == "plus" ? BerryBranch::Plus
                                                          : BerryBranch::Minus,
                                         steps);
              py::dict out;
              out["closed_form"] = r.closed_form;
              out["numeric"] = r.numeric;
              out["steps"] = r.steps;
              out["branch"] = branch;
              return out;
          },
          py::arg("theta"), py::arg("branch") = "plus",
          py::arg("steps") = 100000);
}
