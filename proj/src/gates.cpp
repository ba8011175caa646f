#include "ybg/gates.hpp"

#include "ybg/cyclic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ybg {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr cxd kI{0.0, 1.0};

Mat outer(const Ket4 &v) {
    Mat m(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            m(i, j) = v[i] * std::conj(v[j]);
    return m;
}

cxd hs_inner(const Mat &a, const Mat &b) {
    // trace(a^dag b)
    cxd s{0.0, 0.0};
    for (std::size_t k = 0; k < a.entries().size(); ++k)
        s += std::conj(a.entries()[k]) * b.entries()[k];
    return s;
}

Mat build_bnphi(int n, double phi) {
    if (n < 2)
        throw std::invalid_argument("cyclic order n must be >= 2");
    const double a = std::cos(kTwoPi / n);
    const double b = std::sin(kTwoPi / n);
    Mat g(4, 4);
    g(0, 0) = g(1, 2) = g(2, 1) = g(3, 3) = a;
    g(1, 1) = g(2, 2) = kI * b;
    g(0, 3) = -kI * b * std::polar(1.0, phi);
    g(3, 0) = -kI * b * std::polar(1.0, -phi);
    return g;
}

Mat build_general(const GeneralParams &p) {
    if (p.q == cxd{0.0, 0.0})
        throw std::invalid_argument("General family requires q != 0");
    Mat g(4, 4);
    g(0, 0) = g(1, 2) = g(2, 1) = g(3, 3) = p.alpha;
    g(1, 1) = g(2, 2) = -p.beta;
    g(0, 3) = p.beta * p.q;
    g(3, 0) = p.beta / p.q;
    return g;
}

Mat build_continuous(const ContinuousParams &p) {
    const cxd scale = std::polar(1.0, p.t);
    const double c = std::cos(p.theta);
    const double s = std::sin(p.theta);
    Mat g(4, 4);
    g(0, 0) = g(1, 2) = g(2, 1) = g(3, 3) = c;
    g(1, 1) = g(2, 2) = kI * s;
    g(0, 3) = -kI * s * std::polar(1.0, p.phi);
    g(3, 0) = -kI * s * std::polar(1.0, -p.phi);
    return scale * g;
}

Mat build_graded(const GradedParams &p) {
    if (p.n < 2)
        throw std::invalid_argument("graded family requires n >= 2");
    if (p.d0 < 0 || p.d0 >= p.n || p.d1 < 0 || p.d1 >= p.n)
        throw std::invalid_argument("graded degrees must lie in [0, n)");
    auto omega_pow = [&](long long e) {
        const long long r = ((e % p.n) + p.n) % p.n;
        return std::polar(1.0, kTwoPi * static_cast<double>(r) / p.n);
    };
    Mat g(4, 4);
    g(0, 0) = omega_pow(static_cast<long long>(p.d0) * p.d0);
    g(1, 2) = g(2, 1) = omega_pow(static_cast<long long>(p.d0) * p.d1);
    g(3, 3) = omega_pow(static_cast<long long>(p.d1) * p.d1);
    return g;
}

Mat build_barenco(const BarencoParams &p) {
    // Controlled 2x2 block e^{i(alpha I - theta n.sigma)}; with
    // (n.sigma)^2 = I the exponential collapses to
    // e^{i alpha}(cos theta I - i sin theta n.sigma).
    const cxd phase = std::polar(1.0, p.alpha);
    const double c = std::cos(p.theta);
    const double s = std::sin(p.theta);
    const cxd nxy = std::polar(1.0, -p.phi); // (n.sigma)_{01} = e^{-i phi}
    Mat g(4, 4);
    g(0, 0) = g(1, 1) = 1.0;
    g(2, 2) = phase * c;
    g(3, 3) = phase * c;
    g(2, 3) = phase * (-kI) * s * nxy;
    g(3, 2) = phase * (-kI) * s * std::conj(nxy);
    return g;
}

} // namespace

Mat sigma_x() { return Mat(2, 2, {0.0, 1.0, 1.0, 0.0}); }
Mat sigma_y() { return Mat(2, 2, {0.0, -kI, kI, 0.0}); }
Mat sigma_z() { return Mat(2, 2, {1.0, 0.0, 0.0, -1.0}); }

std::array<Ket4, 4> bell_basis() {
    const double r = 1.0 / std::sqrt(2.0);
    return {Ket4({r, 0.0, 0.0, r}), Ket4({r, 0.0, 0.0, -r}),
            Ket4({0.0, r, r, 0.0}), Ket4({0.0, r, -r, 0.0})};
}

Mat build_gate(const GateFamily &family) {
    return std::visit(
        [](const auto &p) -> Mat {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, BnParams>)
                return bn_gate(p.n);
            else if constexpr (std::is_same_v<T, BnPhiParams>)
                return build_bnphi(p.n, p.phi);
            else if constexpr (std::is_same_v<T, GeneralParams>)
                return build_general(p);
            else if constexpr (std::is_same_v<T, ContinuousParams>)
                return build_continuous(p);
            else if constexpr (std::is_same_v<T, GradedParams>)
                return build_graded(p);
            else
                return build_barenco(p);
        },
        family);
}

Mat q_conjugate(const Mat &g, double phi) {
    const cxd h = std::polar(1.0, phi / 2.0);
    const Mat q(2, 2, {h, 0.0, 0.0, 1.0});
    const Mat qinv(2, 2, {1.0 / h, 0.0, 0.0, 1.0});
    return kron(q, q) * g * kron(qinv, qinv);
}

bool unitarity_conditions(cxd alpha, cxd beta, cxd q) {
    if (std::abs(std::abs(q) - 1.0) > 1e-12)
        throw std::invalid_argument("unitarity_conditions requires |q| = 1");
    const double cond1 = std::abs(std::norm(alpha) + std::norm(beta) - 1.0);
    const double cond2 =
        std::abs(alpha * std::conj(beta) + beta * std::conj(alpha));
    return cond1 <= 1e-12 && cond2 <= 1e-12;
}

BellProjectorDecomposition bell_projector_decomposition(const Mat &g) {
    if (g.rows() != 4 || g.cols() != 4)
        throw std::invalid_argument("expected a 4x4 matrix");
    const auto bell = bell_basis();
    const Mat basis[3] = {Mat::identity(4), outer(bell[3]), outer(bell[0])};

    // Normal equations of the least-squares fit in the Hilbert-Schmidt inner
    // product; the 3x3 Gram system is solved by hand (it is tiny and well
    // conditioned: projectors vs identity).
    cxd gram[3][3];
    cxd rhs[3];
    for (int i = 0; i < 3; ++i) {
        rhs[i] = hs_inner(basis[i], g);
        for (int j = 0; j < 3; ++j)
            gram[i][j] = hs_inner(basis[i], basis[j]);
    }
    // Gaussian elimination, 3x3.
    cxd m[3][4];
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j)
            m[i][j] = gram[i][j];
        m[i][3] = rhs[i];
    }
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::abs(m[r][col]) > std::abs(m[piv][col]))
                piv = r;
        for (int j = 0; j < 4; ++j)
            std::swap(m[col][j], m[piv][j]);
        for (int r = 0; r < 3; ++r) {
            if (r == col)
                continue;
            const cxd f = m[r][col] / m[col][col];
            for (int j = col; j < 4; ++j)
                m[r][j] -= f * m[col][j];
        }
    }
    const cxd c0 = m[0][3] / m[0][0];
    const cxd c1 = m[1][3] / m[1][1];
    const cxd c2 = m[2][3] / m[2][2];

    const Mat fit = c0 * basis[0] + c1 * basis[1] + c2 * basis[2];
    return {c0, c1, c2, frobenius_distance(g, fit)};
}

PauliDecomposition pauli_decomposition(const Mat &g) {
    if (g.rows() != 4 || g.cols() != 4)
        throw std::invalid_argument("expected a 4x4 matrix");
    const Mat paulis[4] = {Mat::identity(2), sigma_x(), sigma_y(), sigma_z()};
    PauliDecomposition d;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const Mat op = kron(paulis[i], paulis[j]);
            // Pauli tensors are Hermitian, so trace(op * g) needs no
            // conjugation; reuse the HS inner product.
            d.c[i][j] = hs_inner(op, g) / 4.0;
        }
    return d;
}

Mat pauli_reconstruct(const PauliDecomposition &d) {
    const Mat paulis[4] = {Mat::identity(2), sigma_x(), sigma_y(), sigma_z()};
    Mat g(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            g += d.c[i][j] * kron(paulis[i], paulis[j]);
    return g;
}

bool graded_entangling_condition(int n, int d0, int d1) {
    if (n < 2)
        throw std::invalid_argument("graded family requires n >= 2");
    if (d0 < 0 || d0 >= n || d1 < 0 || d1 >= n)
        throw std::invalid_argument("graded degrees must lie in [0, n)");
    const long long diff = static_cast<long long>(d0) - d1;
    return (diff * diff) % n != 0;
}

} // namespace ybg
