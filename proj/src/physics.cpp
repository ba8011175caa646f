#include "ybg/physics.hpp"

#include "ybg/gates.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace ybg {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kPi = std::numbers::pi;
constexpr cxd kI{0.0, 1.0};

double f_branch(double theta, int sign) {
    return std::sqrt(std::max(0.0, 1.0 + sign * std::sin(theta))) /
           std::sqrt(2.0);
}
} // namespace

Mat braid_rtheta(double theta, double phi) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    Mat g(4, 4);
    g(0, 0) = g(1, 2) = g(2, 1) = g(3, 3) = c;
    g(1, 1) = g(2, 2) = -kI * s;
    g(0, 3) = kI * s * std::polar(1.0, phi);
    g(3, 0) = kI * s * std::polar(1.0, -phi);
    return g;
}

HamiltonianSpec hamiltonian_phi(double theta, double phi, double phidot) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    Mat h(4, 4);
    h(0, 0) = -s;
    h(3, 3) = s;
    h(0, 3) = -kI * c * std::polar(1.0, phi);
    h(3, 0) = kI * c * std::polar(1.0, -phi);
    h *= cxd{phidot * s, 0.0};
    return {std::move(h), phidot, theta, phi, DriveKind::PhiDriven};
}

Mat hamiltonian_phi_fd(double theta, double phi, double phidot, double delta) {
    if (delta <= 0.0 || delta > 1e-3)
        throw std::invalid_argument("delta must lie in (0, 1e-3]");
    const Mat fwd = braid_rtheta(theta, phi + phidot * delta);
    const Mat bwd = braid_rtheta(theta, phi - phidot * delta);
    const Mat diff = cxd{1.0 / (2.0 * delta), 0.0} * (fwd - bwd);
    return kI * diff * dagger(braid_rtheta(theta, phi));
}

SpinDecomposition spin_decomposition_phi(double theta, double phi,
                                         double phidot) {
    (void)phi; // coefficients carry the phase separately
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const cxd z{-phidot * s * s, 0.0};
    return {z, z, -kI * phidot * s * c, kI * phidot * s * c};
}

Mat spin_reconstruct(const SpinDecomposition &d, double phi) {
    const Mat i2 = Mat::identity(2);
    const Mat sz = cxd{0.5, 0.0} * sigma_z();
    const Mat sp = cxd{0.5, 0.0} * (sigma_x() + kI * sigma_y());
    const Mat sm = cxd{0.5, 0.0} * (sigma_x() - kI * sigma_y());
    return d.c_z1 * kron(sz, i2) + d.c_1z * kron(i2, sz) +
           (d.c_pp * std::polar(1.0, phi)) * kron(sp, sp) +
           (d.c_mm * std::polar(1.0, -phi)) * kron(sm, sm);
}

HamiltonianSpec hamiltonian_theta(double thetadot, double phi, double theta) {
    Mat h(4, 4);
    h(0, 3) = cxd{-thetadot, 0.0} * std::polar(1.0, phi);
    h(1, 2) = h(2, 1) = thetadot;
    h(3, 0) = cxd{-thetadot, 0.0} * std::polar(1.0, -phi);
    return {std::move(h), thetadot, theta, phi, DriveKind::ThetaDriven};
}

Mat hamiltonian_theta_fd(double theta, double phi, double thetadot,
                         double delta) {
    if (delta <= 0.0 || delta > 1e-3)
        throw std::invalid_argument("delta must lie in (0, 1e-3]");
    const Mat fwd = braid_rtheta(theta + thetadot * delta, phi);
    const Mat bwd = braid_rtheta(theta - thetadot * delta, phi);
    const Mat diff = cxd{1.0 / (2.0 * delta), 0.0} * (fwd - bwd);
    return kI * diff * dagger(braid_rtheta(theta, phi));
}

EigenPair eigen_system_phi(double theta, double phi, double phidot) {
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    const double f = f_branch(theta, +1);
    const cxd phase = std::polar(1.0, phi);

    double g;
    bool limited = false;
    if (1.0 + s < 1e-10) {
        // theta ~ -pi/2: g has a 0/0 form; the analytic limit is sign(cos).
        g = c >= 0.0 ? 1.0 : -1.0;
        limited = true;
    } else {
        g = c / (std::sqrt(2.0) * std::sqrt(1.0 + s));
    }

    Ket4 plus = Ket4::normalized({-kI * g * phase, 0.0, 0.0, cxd{f, 0.0}});
    Ket4 minus = Ket4::normalized({kI * f * phase, 0.0, 0.0, cxd{g, 0.0}});
    return {phidot * s, -phidot * s, std::move(plus), std::move(minus),
            limited};
}

BerryResult berry_phase(double theta, BerryBranch branch, std::int64_t steps) {
    if (steps < 100)
        throw std::invalid_argument("steps must be >= 100");
    const int sign = branch == BerryBranch::Plus ? +1 : -1;
    const double s = std::sin(theta);
    if (1.0 + sign * s < 1e-10)
        throw std::invalid_argument(
            "requested branch is singular at this theta (1 +- sin theta = 0)");

    const double f = f_branch(theta, sign);
    const double g =
        std::cos(theta) / (std::sqrt(2.0) * std::sqrt(1.0 + sign * s));

    // Pancharatnam overlap product over the phi loop, one ket per grid point
    // with the loop closed back onto the first. Each per-step phase is tiny,
    // so accumulating -arg(<v_k|v_{k+1}>) is unwrap-free.
    const double dphi = kTwoPi / static_cast<double>(steps);
    auto ket_at = [&](double phi) {
        return Ket4::normalized(
            {kI * f * std::polar(1.0, phi), 0.0, 0.0, cxd{g, 0.0}});
    };
    double gamma = 0.0;
    Ket4 prev = ket_at(0.0);
    const Ket4 first = prev;
    for (std::int64_t k = 1; k <= steps; ++k) {
        const Ket4 cur = k == steps ? first : ket_at(dphi * k);
        gamma -= std::arg(inner(prev, cur));
        prev = cur;
    }
    return {-kPi * (1.0 + sign * s), gamma, steps, branch};
}

double concurrence(const Ket4 &v) {
    if (std::abs(v.norm() - 1.0) > 1e-9)
        throw std::invalid_argument("state must be normalized");
    return 2.0 * std::abs(v[0] * v[3] - v[1] * v[2]);
}

EntanglingVerdict is_entangling(const Mat &g, int sample_count, double tol,
                                std::uint64_t seed) {
    for (std::size_t b = 0; b < 4; ++b) {
        const Ket4 in = Ket4::basis(b);
        if (concurrence(apply(g, in)) > tol)
            return {true, in};
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int k = 0; k < sample_count; ++k) {
        // Random single-qubit states (a|0>+b|1>) (x) (c|0>+d|1>).
        const double t1 = std::acos(1.0 - 2.0 * unif(rng));
        const double p1 = kTwoPi * unif(rng);
        const double t2 = std::acos(1.0 - 2.0 * unif(rng));
        const double p2 = kTwoPi * unif(rng);
        const cxd a = std::cos(t1 / 2.0);
        const cxd b = std::sin(t1 / 2.0) * std::polar(1.0, p1);
        const cxd c = std::cos(t2 / 2.0);
        const cxd d = std::sin(t2 / 2.0) * std::polar(1.0, p2);
        const Ket4 in({a * c, a * d, b * c, b * d});
        if (concurrence(apply(g, in)) > tol)
            return {true, in};
    }
    return {false, std::nullopt};
}

} // namespace ybg
