#pragma once

#include "ybg/matrix.hpp"

namespace ybg {

/// Frobenius residual of (R(x)I)(I(x)R)(R(x)I) = (I(x)R)(R(x)I)(I(x)R) for a
/// 4x4 matrix r, with R(x)I = kron(r, I2) and I(x)R = kron(I2, r).
double braided_ybe_residual(const Mat &r);

/// Residual of R12 R13 R23 = R23 R13 R12 with R13 conjugated through the
/// middle SWAP.
double algebraic_ybe_residual(const Mat &r);

/// The three distinct eigenvalues of B_{n,phi}: a+bi (double root), -a+bi,
/// a-bi with a = cos(2pi/n), b = sin(2pi/n). Degenerate for n = 2 (b = 0)
/// and n = 4 (a = 0); those orders are rejected.
struct EigenTriple {
    cxd lambda1;
    cxd lambda2;
    cxd lambda3;
};

EigenTriple eigentriple_bnphi(int n, double phi);

/// Generic three-eigenvalue Yang-Baxterization
///   R(x) = l1 l3 x(x-1) B^{-1} + (l1+l2+l3+l1 l3/l2) x I - (x-1) B.
/// B^{-1} is taken as B^dag when B is unitary to 1e-12, otherwise by a direct
/// 4x4 solve.
Mat yang_baxterize(const Mat &b, const EigenTriple &lam, double x);

/// Normalization scalar rho(n,x) = a^2 (x-1)^4 + b^2 (x^2-1)^2.
double rho(int n, double x);

/// yang_baxterize(B_{n,phi}, paper triple, x) / sqrt(rho); unitary for every
/// real x != 1. Throws for x = 1 (the zero matrix cannot be normalized).
Mat normalized_rx(int n, double phi, double x);

/// The angle theta(n,x) with cos = a(x-1)/sqrt(a^2(x-1)^2 + b^2(x+1)^2) and
/// sin = b(x+1)/sqrt(...), returned in (-pi, pi]. Throws for x = 1.
double theta_of(int n, double x);

/// Direct 4x4 inverse via Gaussian elimination with partial pivoting.
Mat inverse4(const Mat &m);

} // namespace ybg
