#include "ybg/ybe.hpp"

#include "ybg/cyclic.hpp"
#include "ybg/gates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ybg {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
} // namespace

double braided_ybe_residual(const Mat &r) {
    if (r.rows() != 4 || r.cols() != 4)
        throw std::invalid_argument("expected a 4x4 matrix");
    const Mat i2 = Mat::identity(2);
    const Mat a = kron(r, i2);
    const Mat b = kron(i2, r);
    return frobenius_distance(a * b * a, b * a * b);
}

double algebraic_ybe_residual(const Mat &r) {
    if (r.rows() != 4 || r.cols() != 4)
        throw std::invalid_argument("expected a 4x4 matrix");
    const Mat i2 = Mat::identity(2);
    const Mat r12 = kron(r, i2);
    const Mat r23 = kron(i2, r);
    const Mat s23 = kron(i2, swap_gate());
    const Mat r13 = s23 * r12 * s23;
    return frobenius_distance(r12 * r13 * r23, r23 * r13 * r12);
}

EigenTriple eigentriple_bnphi(int n, double phi) {
    (void)phi; // the spectrum does not depend on the deformation phase
    if (n < 2)
        throw std::invalid_argument("cyclic order n must be >= 2");
    if (n == 2)
        throw std::invalid_argument(
            "n = 2 is degenerate: sin(2pi/n) = 0 collapses the triple");
    if (n == 4)
        throw std::invalid_argument(
            "n = 4 is degenerate: cos(2pi/n) = 0 collapses the triple");
    const double a = std::cos(kTwoPi / n);
    const double b = std::sin(kTwoPi / n);
    return {cxd{a, b}, cxd{-a, b}, cxd{a, -b}};
}

Mat inverse4(const Mat &m) {
    if (m.rows() != 4 || m.cols() != 4)
        throw std::invalid_argument("inverse4 expects a 4x4 matrix");
    cxd aug[4][8] = {};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j)
            aug[i][j] = m(i, j);
        aug[i][4 + i] = 1.0;
    }
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::abs(aug[r][col]) > std::abs(aug[piv][col]))
                piv = r;
        if (std::abs(aug[piv][col]) < 1e-300)
            throw std::invalid_argument("matrix is singular");
        for (int j = 0; j < 8; ++j)
            std::swap(aug[col][j], aug[piv][j]);
        const cxd d = aug[col][col];
        for (int j = 0; j < 8; ++j)
            aug[col][j] /= d;
        for (int r = 0; r < 4; ++r) {
            if (r == col)
                continue;
            const cxd f = aug[r][col];
            for (int j = 0; j < 8; ++j)
                aug[r][j] -= f * aug[col][j];
        }
    }
    Mat inv(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            inv(i, j) = aug[i][4 + j];
    return inv;
}

Mat yang_baxterize(const Mat &b, const EigenTriple &lam, double x) {
    if (b.rows() != 4 || b.cols() != 4)
        throw std::invalid_argument("expected a 4x4 matrix");
    if (lam.lambda2 == cxd{0.0, 0.0})
        throw std::invalid_argument("lambda2 must be non-zero");
    const Mat binv = is_unitary(b, 1e-12) ? dagger(b) : inverse4(b);
    const cxd l1 = lam.lambda1, l2 = lam.lambda2, l3 = lam.lambda3;
    const cxd mid = l1 + l2 + l3 + l1 * l3 / l2;
    return (l1 * l3 * x * (x - 1.0)) * binv + (mid * x) * Mat::identity(4) -
           cxd{x - 1.0, 0.0} * b;
}

double rho(int n, double x) {
    const double a = std::cos(kTwoPi / n);
    const double b = std::sin(kTwoPi / n);
    const double u = (x - 1.0) * (x - 1.0);
    const double v = x * x - 1.0;
    return a * a * u * u + b * b * v * v;
}

Mat normalized_rx(int n, double phi, double x) {
    if (x == 1.0)
        throw std::invalid_argument(
            "x = 1 yields the zero matrix; no normalization exists");
    // Reduced form of the Yang-Baxterization under the paper's eigenvalue
    // assignment: l1 l3 = 1 and the I-term cancels, leaving
    // x(x-1) B^dag - (x-1) B. Valid for every n >= 2, including the orders
    // where the eigenvalue triple itself degenerates.
    const Mat b = build_gate(BnPhiParams{n, phi});
    const Mat rx = cxd{x * (x - 1.0), 0.0} * dagger(b) -
                   cxd{x - 1.0, 0.0} * b;
    const double scale = 1.0 / std::sqrt(rho(n, x));
    return cxd{scale, 0.0} * rx;
}

double theta_of(int n, double x) {
    if (x == 1.0)
        throw std::invalid_argument("theta(n,x) is undefined at x = 1");
    const double a = std::cos(kTwoPi / n);
    const double b = std::sin(kTwoPi / n);
    return std::atan2(b * (x + 1.0), a * (x - 1.0));
}

} // namespace ybg
