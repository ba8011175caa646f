#pragma once

#include "ybg/matrix.hpp"

#include <cstdint>
#include <optional>

namespace ybg {

/// The spectral-parameter-free braiding gate R(theta,phi):
/// [[cos th,0,0,i sin th e^{i phi}],[0,-i sin th,cos th,0],
///  [0,cos th,-i sin th,0],[i sin th e^{-i phi},0,0,cos th]].
/// Applying it to any computational basis ket gives concurrence |sin 2theta|.
Mat braid_rtheta(double theta, double phi);

enum class DriveKind { PhiDriven, ThetaDriven };

struct HamiltonianSpec {
    Mat matrix;
    double drive_rate; // phidot or thetadot, hbar = 1
    double theta;
    double phi;
    DriveKind kind;
};

/// Closed-form Hamiltonian for a linear phi drive:
/// phidot sin th * [[-sin th,0,0,-i cos th e^{i phi}],[0,0,0,0],[0,0,0,0],
///                  [i cos th e^{-i phi},0,0,sin th]].
HamiltonianSpec hamiltonian_phi(double theta, double phi, double phidot);

/// Central-difference oracle i (R(th,phi+phidot*d) - R(th,phi-phidot*d))
/// / (2d) * R^dag(th,phi). Requires 0 < delta <= 1e-3.
Mat hamiltonian_phi_fd(double theta, double phi, double phidot, double delta);

/// H = cZ1 Sz(x)1 + c1Z 1(x)Sz + cPP e^{i phi} S+(x)S+ + cMM e^{-i phi}
/// S-(x)S-, with S = sigma/2 and S+- = (sigma_x +- i sigma_y)/2.
struct SpinDecomposition {
    cxd c_z1;
    cxd c_1z;
    cxd c_pp;
    cxd c_mm;
};

SpinDecomposition spin_decomposition_phi(double theta, double phi,
                                         double phidot);

/// Rebuild the matrix a SpinDecomposition describes, at phase phi.
Mat spin_reconstruct(const SpinDecomposition &d, double phi);

/// Closed-form Hamiltonian for a linear theta drive: antidiagonal with
/// (0,3) = -thetadot e^{i phi}, (1,2) = (2,1) = thetadot,
/// (3,0) = -thetadot e^{-i phi}. The phi phase orientation follows the
/// finite-difference oracle.
/// The matrix does not depend on theta; the parameter only seeds the record
/// (and the point at which the oracle is compared).
HamiltonianSpec hamiltonian_theta(double thetadot, double phi,
                                  double theta = 0.0);

/// Central-difference oracle for the theta drive.
Mat hamiltonian_theta_fd(double theta, double phi, double thetadot,
                         double delta);

/// Eigen system of hamiltonian_phi on the {|00>,|11>} block. The kets are
/// built from f(th) = sqrt(1+sin th)/sqrt(2) and
/// g(th) = cos th / (sqrt(2) sqrt(1+sin th)):
///   ket_plus  = [-i g e^{i phi}, 0, 0, f]   with energy +phidot sin th,
///   ket_minus = [ i f e^{i phi}, 0, 0, g]   with energy -phidot sin th.
/// Near theta = -pi/2 (within 1e-5) the 0/0 limit g -> sign(cos) is
/// substituted and limit_substituted is set.
struct EigenPair {
    double energy_plus;
    double energy_minus;
    Ket4 ket_plus;
    Ket4 ket_minus;
    bool limit_substituted;
};

EigenPair eigen_system_phi(double theta, double phi, double phidot);

enum class BerryBranch { Plus, Minus };

/// Berry phase of the loop phi: 0 -> 2pi at fixed theta.
/// closed_form = -pi(1 +- sin theta); numeric is the Pancharatnam/Wilson-loop
/// overlap product over a uniform grid, phase-accumulated step by step (no
/// mod-2pi ambiguity). The plus branch is singular at theta = -pi/2, the
/// minus branch at theta = +pi/2.
struct BerryResult {
    double closed_form;
    double numeric;
    std::int64_t steps;
    BerryBranch branch;
};

BerryResult berry_phase(double theta, BerryBranch branch, std::int64_t steps);

/// Pure-state concurrence 2|c00 c11 - c01 c10|.
double concurrence(const Ket4 &v);

/// Brylinski-style entangling test: the four computational product states
/// first, then sample_count seeded random product states. Returns the first
/// witness whose image has concurrence > tol; a nullopt witness means no
/// entangled image was found (probabilistic "not entangling").
struct EntanglingVerdict {
    bool entangling;
    std::optional<Ket4> witness;
};

EntanglingVerdict is_entangling(const Mat &g, int sample_count, double tol,
                                std::uint64_t seed = 0);

} // namespace ybg
