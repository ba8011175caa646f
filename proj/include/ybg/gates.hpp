#pragma once

#include "ybg/matrix.hpp"

#include <array>
#include <variant>

namespace ybg {

// Pauli matrices, physics convention: |0> is the +1 eigenvector of sigma_z.
Mat sigma_x();
Mat sigma_y();
Mat sigma_z();

/// Bell states in the order |Phi+>, |Phi->, |Psi+>, |Psi->.
std::array<Ket4, 4> bell_basis();

// ---------------------------------------------------------------------------
// Gate family parameter records
// ---------------------------------------------------------------------------

struct BnParams {
    int n;
};

struct BnPhiParams {
    int n;
    double phi;
};

/// R_{alpha,beta,q}: always a braided Yang-Baxter solution; unitary only when
/// the conditions checked by unitarity_conditions hold.
struct GeneralParams {
    cxd alpha;
    cxd beta;
    cxd q;
};

/// e^{it} * [[cos th,0,0,-i sin th e^{i phi}],[0,i sin th,cos th,0],
///           [0,cos th,i sin th,0],[-i sin th e^{-i phi},0,0,cos th]]
struct ContinuousParams {
    double t;
    double theta;
    double phi;
};

/// Braiding of a Z_n-graded two-dimensional space whose basis vectors carry
/// degrees d0 and d1. Exponents are reduced mod n.
struct GradedParams {
    int n;
    int d0;
    int d1;
};

/// Barenco's three-parameter universal gate: controlled
/// e^{i(alpha I - theta n(phi).sigma)} with n(phi) = (cos phi, sin phi, 0).
struct BarencoParams {
    double alpha;
    double theta;
    double phi;
};

using GateFamily = std::variant<BnParams, BnPhiParams, GeneralParams,
                                ContinuousParams, GradedParams, BarencoParams>;

/// Construct the 4x4 matrix of the given family. Throws std::invalid_argument
/// when the family invariants are violated (n < 2, q = 0, degree out of
/// range).
Mat build_gate(const GateFamily &family);

/// (Q (x) Q) g (Q (x) Q)^{-1} with Q = diag(e^{i phi/2}, 1). Maps B_n to
/// B_{n,phi}.
Mat q_conjugate(const Mat &g, double phi);

/// The unitarity criterion for R_{alpha,beta,q} with |q| = 1:
/// (i) |alpha|^2 + |beta|^2 = 1 and (ii) alpha*conj(beta) + beta*conj(alpha)
/// = 0, both within 1e-12. Throws when |q| deviates from 1 by more than
/// 1e-12.
bool unitarity_conditions(cxd alpha, cxd beta, cxd q);

/// Least-squares fit of g onto span{I, |Psi-><Psi-|, |Phi+><Phi+|}.
struct BellProjectorDecomposition {
    cxd c_identity;
    cxd c_psi_minus;
    cxd c_phi_plus;
    double residual;
};

BellProjectorDecomposition bell_projector_decomposition(const Mat &g);

/// Coefficients c[i][j] = trace((sigma_i (x) sigma_j) g)/4, indices ordered
/// I, x, y, z. The reconstruction sum c[i][j] sigma_i (x) sigma_j always
/// reproduces g (the sixteen Pauli tensors are an orthogonal basis).
struct PauliDecomposition {
    std::array<std::array<cxd, 4>, 4> c;
};

PauliDecomposition pauli_decomposition(const Mat &g);

/// Rebuild the matrix a PauliDecomposition describes.
Mat pauli_reconstruct(const PauliDecomposition &d);

/// The graded gate is entangling iff omega^{d0^2+d1^2} != omega^{2 d0 d1},
/// i.e. (d0 - d1)^2 is not 0 mod n.
bool graded_entangling_condition(int n, int d0, int d1);

} // namespace ybg
