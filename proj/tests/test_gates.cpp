#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ybg/cyclic.hpp"
#include "ybg/gates.hpp"
#include "ybg/matrix.hpp"
#include "ybg/physics.hpp"
#include "ybg/ybe.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace ybg;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("BnPhi with phi = 0 is Bn") {
    for (int n = 2; n <= 16; ++n)
        CHECK(frobenius_distance(build_gate(BnPhiParams{n, 0.0}),
                                 build_gate(BnParams{n})) < 1e-15);
}

TEST_CASE("BnPhi closed form") {
    const int n = 6;
    const double phi = 0.8;
    const double a = std::cos(2.0 * kPi / n);
    const double b = std::sin(2.0 * kPi / n);
    const Mat g = build_gate(BnPhiParams{n, phi});
    CHECK(std::abs(g(0, 0) - cxd{a}) < 1e-15);
    CHECK(std::abs(g(3, 3) - cxd{a}) < 1e-15);
    CHECK(std::abs(g(0, 3) - cxd{0.0, -b} * std::exp(cxd{0.0, phi})) < 1e-15);
    CHECK(std::abs(g(3, 0) - cxd{0.0, -b} * std::exp(cxd{0.0, -phi})) < 1e-15);
    CHECK(std::abs(g(1, 1) - cxd{0.0, b}) < 1e-15);
    CHECK(std::abs(g(2, 2) - cxd{0.0, b}) < 1e-15);
    CHECK(std::abs(g(1, 2) - cxd{a}) < 1e-15);
    CHECK(std::abs(g(2, 1) - cxd{a}) < 1e-15);
    CHECK(std::abs(g(0, 1)) == 0.0);
}

TEST_CASE("BnPhi equals the Q-conjugation of Bn") {
    for (int n : {3, 5, 7, 12}) {
        for (double phi : {0.3, 1.3, -2.1}) {
            CHECK(frobenius_distance(build_gate(BnPhiParams{n, phi}),
                                     q_conjugate(bn_gate(n), phi)) <= 1e-14);
        }
    }
}

TEST_CASE("q_conjugate with phi = 0 is the identity map") {
    const Mat g = build_gate(ContinuousParams{0.4, 0.9, 1.7});
    CHECK(frobenius_distance(q_conjugate(g, 0.0), g) < 1e-15);
}

TEST_CASE("General family recovers BnPhi") {
    // alpha = cos(2pi/n), beta = -i sin(2pi/n), q = e^{i phi}.
    for (int n : {3, 6, 10}) {
        const double phi = 0.77;
        const cxd alpha{std::cos(2.0 * kPi / n), 0.0};
        const cxd beta{0.0, -std::sin(2.0 * kPi / n)};
        const Mat g =
            build_gate(GeneralParams{alpha, beta, std::exp(cxd{0.0, phi})});
        CHECK(frobenius_distance(g, build_gate(BnPhiParams{n, phi})) < 1e-14);
    }
}

TEST_CASE("General family unitarity conditions") {
    const cxd q = std::exp(cxd{0.0, 0.4});
    CHECK(unitarity_conditions(cxd{0.6, 0.0}, cxd{0.0, 0.8}, q));
    CHECK(unitarity_conditions(cxd{0.0, 1.0}, cxd{0.0, 0.0}, q));
    // |alpha|^2 + |beta|^2 != 1
    CHECK_FALSE(unitarity_conditions(cxd{0.6, 0.0}, cxd{0.0, 0.9}, q));
    // real cross term does not cancel
    CHECK_FALSE(unitarity_conditions(cxd{0.6, 0.0}, cxd{0.8, 0.0}, q));
    CHECK_THROWS_AS(unitarity_conditions(cxd{1.0, 0.0}, cxd{0.0, 0.0},
                                         cxd{2.0, 0.0}),
                    std::invalid_argument);

    // The conditions really decide unitarity of the built matrix.
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        const double th = 0.2 + unif(rng) * (kPi / 2.0 - 0.4);
        const double mu = unif(rng) * 2.0 * kPi;
        const cxd phase = std::exp(cxd{0.0, mu});
        const cxd alpha = std::cos(th) * phase;
        // Half the draws satisfy the criterion exactly; the other half break
        // the norm condition or the phase condition.
        cxd beta = cxd{0.0, 1.0} * phase * std::sin(th);
        if (trial % 3 == 1)
            beta *= 1.05; // breaks |alpha|^2 + |beta|^2 = 1
        if (trial % 3 == 2)
            beta *= std::exp(cxd{0.0, 0.5}); // breaks the phase condition
        const cxd q = std::exp(cxd{0.0, unif(rng) * 2.0 * kPi});
        const bool cond = unitarity_conditions(alpha, beta, q);
        const bool uni =
            is_unitary(build_gate(GeneralParams{alpha, beta, q}), 1e-10);
        CHECK(cond == uni);
    }
}

TEST_CASE("Graded gate small cases") {
    // n = 2, degrees 0 and 1: diag(1, swap-block with sign structure, -1...).
    const Mat g = build_gate(GradedParams{2, 0, 1});
    // omega = e^{i pi} = -1; entries: (0,0) = omega^{d0^2} = 1,
    // (3,3) = omega^{d1^2} = -1, swap block = omega^{d0 d1} = 1.
    CHECK(std::abs(g(0, 0) - cxd{1.0}) < 1e-15);
    CHECK(std::abs(g(3, 3) - cxd{-1.0}) < 1e-15);
    CHECK(std::abs(g(1, 2) - cxd{1.0}) < 1e-15);
    CHECK(std::abs(g(2, 1) - cxd{1.0}) < 1e-15);
    CHECK(std::abs(g(1, 1)) == 0.0);
    CHECK(std::abs(g(0, 3)) == 0.0);

    // Degenerate degrees give a phase times SWAP (never entangling).
    const Mat same = build_gate(GradedParams{5, 2, 2});
    const cxd w = std::exp(cxd{0.0, 2.0 * kPi * 4.0 / 5.0});
    CHECK(frobenius_distance(same, w * swap_gate()) < 1e-14);

    CHECK_THROWS_AS(build_gate(GradedParams{1, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(build_gate(GradedParams{4, 0, 4}), std::invalid_argument);
    CHECK_THROWS_AS(build_gate(GradedParams{4, -1, 0}),
                    std::invalid_argument);
}

TEST_CASE("Graded gates satisfy the braided equation for every degree pair") {
    for (int n = 2; n <= 12; ++n)
        for (int d0 = 0; d0 < n; ++d0)
            for (int d1 = 0; d1 < n; ++d1)
                CHECK(braided_ybe_residual(build_gate(GradedParams{
                          n, d0, d1})) <= 1e-12);
}

TEST_CASE("graded_entangling_condition agrees with a sampling check") {
    for (int n = 2; n <= 12; ++n) {
        for (int d0 = 0; d0 < n; ++d0) {
            for (int d1 = 0; d1 < n; ++d1) {
                const bool cond = graded_entangling_condition(n, d0, d1);
                const auto verdict = is_entangling(
                    build_gate(GradedParams{n, d0, d1}), 200, 1e-10, 17);
                CHECK(cond == verdict.entangling);
            }
        }
    }
}

TEST_CASE("Barenco gate structure") {
    // theta = 0 leaves only the controlled global phase e^{i alpha}.
    const double alpha = 0.9;
    const Mat id_like = build_gate(BarencoParams{alpha, 0.0, 1.3});
    Mat expect = Mat::identity(4);
    expect(2, 2) = expect(3, 3) = std::exp(cxd{0.0, alpha});
    CHECK(frobenius_distance(id_like, expect) < 1e-15);

    // Upper-left block is the identity for any parameters.
    const Mat g = build_gate(BarencoParams{0.3, 1.1, 2.0});
    CHECK(std::abs(g(0, 0) - cxd{1.0}) == 0.0);
    CHECK(std::abs(g(1, 1) - cxd{1.0}) == 0.0);
    CHECK(std::abs(g(0, 1)) == 0.0);
    CHECK(std::abs(g(2, 3) -
                   std::exp(cxd{0.0, 0.3}) * cxd{0.0, -1.0} * std::sin(1.1) *
                       std::exp(cxd{0.0, -2.0})) < 1e-15);

    // Always unitary.
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> unif(-3.0, 3.0);
    for (int trial = 0; trial < 50; ++trial)
        CHECK(is_unitary(build_gate(BarencoParams{unif(rng), unif(rng),
                                                  unif(rng)}),
                         1e-12));
}

TEST_CASE("bell basis is orthonormal and maximally entangled") {
    const auto bell = bell_basis();
    for (int i = 0; i < 4; ++i) {
        CHECK(bell[i].norm() == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(concurrence(bell[i]) == doctest::Approx(1.0).epsilon(1e-14));
        for (int j = i + 1; j < 4; ++j)
            CHECK(std::abs(inner(bell[i], bell[j])) < 1e-15);
    }
    // spot-check |Phi+> and |Psi->
    CHECK(std::abs(bell[0][0] - cxd{std::numbers::sqrt2 / 2.0}) < 1e-15);
    CHECK(std::abs(bell[3][1] - cxd{std::numbers::sqrt2 / 2.0}) < 1e-15);
    CHECK(std::abs(bell[3][2] + cxd{std::numbers::sqrt2 / 2.0}) < 1e-15);
}

TEST_CASE("bell projector decomposition of Bn") {
    // B_n = (alpha - beta) I - 2 alpha |Psi-><Psi-| + 2 beta |Phi+><Phi+|.
    for (int n : {3, 5, 8, 12}) {
        const cxd alpha{std::cos(2.0 * kPi / n), 0.0};
        const cxd beta{0.0, -std::sin(2.0 * kPi / n)};
        const auto d = bell_projector_decomposition(bn_gate(n));
        CHECK(std::abs(d.c_identity - (alpha - beta)) < 1e-13);
        CHECK(std::abs(d.c_psi_minus - cxd{-2.0, 0.0} * alpha) < 1e-13);
        CHECK(std::abs(d.c_phi_plus - cxd{2.0, 0.0} * beta) < 1e-13);
        CHECK(d.residual < 1e-13);
    }

    const auto id = bell_projector_decomposition(Mat::identity(4));
    CHECK(std::abs(id.c_identity - cxd{1.0}) < 1e-13);
    CHECK(std::abs(id.c_psi_minus) < 1e-13);
    CHECK(std::abs(id.c_phi_plus) < 1e-13);
    CHECK(id.residual < 1e-13);

    // A generic Barenco gate does not live in that three-dimensional span.
    const auto far =
        bell_projector_decomposition(build_gate(BarencoParams{0.7, 1.1, 0.4}));
    CHECK(far.residual > 0.1);
}

TEST_CASE("pauli decomposition reconstructs every family") {
    const GateFamily families[] = {
        BnParams{7},
        BnPhiParams{5, 1.3},
        GeneralParams{cxd{0.6, 0.0}, cxd{0.0, 0.8}, std::exp(cxd{0.0, 0.4})},
        ContinuousParams{0.2, 0.9, 2.2},
        GradedParams{6, 1, 4},
        BarencoParams{0.5, 0.8, 1.9},
    };
    for (const auto &f : families) {
        const Mat g = build_gate(f);
        CHECK(frobenius_distance(pauli_reconstruct(pauli_decomposition(g)),
                                 g) < 1e-13);
    }
}

TEST_CASE("pauli decomposition closed forms") {
    // B_n = (alpha-beta)/2 (II + yy) + (alpha+beta)/2 (xx + zz).
    for (int n : {3, 6, 9}) {
        const cxd alpha{std::cos(2.0 * kPi / n), 0.0};
        const cxd beta{0.0, -std::sin(2.0 * kPi / n)};
        const auto d = pauli_decomposition(bn_gate(n));
        CHECK(std::abs(d.c[0][0] - (alpha - beta) / 2.0) < 1e-14);
        CHECK(std::abs(d.c[2][2] - (alpha - beta) / 2.0) < 1e-14);
        CHECK(std::abs(d.c[1][1] - (alpha + beta) / 2.0) < 1e-14);
        CHECK(std::abs(d.c[3][3] - (alpha + beta) / 2.0) < 1e-14);
        CHECK(std::abs(d.c[0][1]) < 1e-14);
        CHECK(std::abs(d.c[1][2]) < 1e-14);
    }

    // SWAP = (II + xx + yy + zz)/2.
    const auto s = pauli_decomposition(swap_gate());
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(std::abs(s.c[i][j] - (i == j ? cxd{0.5} : cxd{0.0})) <
                  1e-14);

    // sigma_z (x) I picks exactly one coefficient.
    const auto z1 = pauli_decomposition(kron(sigma_z(), Mat::identity(2)));
    CHECK(std::abs(z1.c[3][0] - cxd{1.0}) < 1e-15);
    CHECK(std::abs(z1.c[0][0]) < 1e-15);
}

TEST_CASE("continuous family embeds the deformed gates at theta = 2pi/n") {
    for (int n : {3, 5, 8, 12}) {
        for (double phi : {0.0, 0.6, -1.9}) {
            const Mat cont =
                build_gate(ContinuousParams{0.0, 2.0 * kPi / n, phi});
            CHECK(frobenius_distance(cont, build_gate(BnPhiParams{n, phi})) <
                  1e-14);
        }
    }
}

TEST_CASE("continuous global phase is a scalar factor") {
    const Mat base = build_gate(ContinuousParams{0.0, 0.9, 1.4});
    const Mat shifted = build_gate(ContinuousParams{0.7, 0.9, 1.4});
    CHECK(frobenius_distance(shifted, std::exp(cxd{0.0, 0.7}) * base) <
          1e-14);
}

TEST_CASE("scaling covariance of the braided equation") {
    // If B solves the braided equation so does c B for any scalar c.
    const Mat b = bn_gate(5);
    for (cxd c : {cxd{2.0, 0.0}, cxd{0.0, 1.0}, cxd{0.3, -0.4}})
        CHECK(braided_ybe_residual(c * b) <= 50.0 * braided_ybe_residual(b) +
                                                 1e-12);
}

TEST_CASE("entangling criterion across the Bn family") {
    CHECK_FALSE(is_entangling(bn_gate(2), 2000, 1e-10, 3).entangling);
    CHECK_FALSE(is_entangling(bn_gate(4), 2000, 1e-10, 3).entangling);
    for (int n : {3, 5, 6, 7, 8, 12, 16}) {
        const auto verdict = is_entangling(bn_gate(n), 2000, 1e-10, 3);
        CHECK(verdict.entangling);
        CHECK(verdict.witness.has_value());
    }
}

TEST_CASE("unitary General gates with nonzero cross entries entangle") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> unif(0.15, kPi / 2.0 - 0.15);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
    for (int trial = 0; trial < 200; ++trial) {
        const double th = unif(rng);
        const double mu = ang(rng);
        // alpha = cos th e^{i mu}, beta = i sin th e^{i mu} satisfies both
        // unitarity conditions.
        const cxd phase = std::exp(cxd{0.0, mu});
        const cxd alpha = std::cos(th) * phase;
        const cxd beta = cxd{0.0, 1.0} * std::sin(th) * phase;
        const cxd q = std::exp(cxd{0.0, ang(rng)});
        REQUIRE(unitarity_conditions(alpha, beta, q));
        const Mat g = build_gate(GeneralParams{alpha, beta, q});
        CHECK(is_unitary(g, 1e-12));
        CHECK(is_entangling(g, 200, 1e-10, trial + 1).entangling);
    }
}
