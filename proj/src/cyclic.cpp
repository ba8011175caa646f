#include "ybg/cyclic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ybg {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kBruteForceMaxOrder = 4096;
} // namespace

Mat rotation_rep(int n, int a) {
    if (n < 2)
        throw std::invalid_argument("cyclic order n must be >= 2");
    if (a < 0 || a >= n)
        throw std::invalid_argument("exponent a must satisfy 0 <= a < n");
    const double angle = kTwoPi * static_cast<double>(a) / n;
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return Mat(2, 2, {c, -s, s, c});
}

Mat r_bruteforce(int n) {
    if (n < 2)
        throw std::invalid_argument("cyclic order n must be >= 2");
    if (n > kBruteForceMaxOrder)
        throw std::invalid_argument(
            "brute-force summation supports n <= 4096; use r_closed_form");

    // Kahan-compensated accumulation keeps the result independent of the
    // summation order to well below the 1e-13 contract.
    std::vector<cxd> sum(16, cxd{0.0, 0.0});
    std::vector<cxd> comp(16, cxd{0.0, 0.0});
    for (int a = 0; a < n; ++a) {
        const Mat sa = rotation_rep(n, a);
        for (int b = 0; b < n; ++b) {
            // omega^{-ab} with the exponent reduced mod n exactly, so the
            // float argument stays in [0, 2pi).
            const long long e =
                ((-(static_cast<long long>(a) * b)) % n + n) % n;
            const cxd w = std::polar(1.0, kTwoPi * static_cast<double>(e) / n);
            const Mat term = kron(sa, rotation_rep(n, b));
            for (std::size_t k = 0; k < 16; ++k) {
                const cxd y = w * term.entries()[k] - comp[k];
                const cxd t = sum[k] + y;
                comp[k] = (t - sum[k]) - y;
                sum[k] = t;
            }
        }
    }
    for (auto &x : sum)
        x /= static_cast<double>(n);
    return Mat(4, 4, std::move(sum));
}

Mat r_closed_form(int n) {
    if (n < 2)
        throw std::invalid_argument("cyclic order n must be >= 2");
    const double c = std::cos(kTwoPi / n);
    const double s = std::sin(kTwoPi / n);
    const cxd is{0.0, s};
    Mat r(4, 4);
    r(0, 0) = r(1, 1) = r(2, 2) = r(3, 3) = c;
    r(0, 3) = r(3, 0) = -is;
    r(1, 2) = r(2, 1) = is;
    return r;
}

Mat swap_gate() {
    Mat s(4, 4);
    s(0, 0) = s(1, 2) = s(2, 1) = s(3, 3) = 1.0;
    return s;
}

Mat bn_gate(int n) {
    if (n < 2)
        throw std::invalid_argument("cyclic order n must be >= 2");
    const cxd alpha{std::cos(kTwoPi / n), 0.0};
    const cxd beta{0.0, -std::sin(kTwoPi / n)};
    Mat b(4, 4);
    b(0, 0) = b(1, 2) = b(2, 1) = b(3, 3) = alpha;
    b(0, 3) = b(3, 0) = beta;
    b(1, 1) = b(2, 2) = -beta;
    return b;
}

std::pair<double, double> trig_sum_pair(double a, double d, int count) {
    if (count < 1)
        throw std::invalid_argument("count must be >= 1");
    double ss = 0.0, cs = 0.0;
    for (int b = 0; b < count; ++b) {
        ss += std::sin(a + b * d);
        cs += std::cos(a + b * d);
    }
    return {ss, cs};
}

std::pair<double, double> trig_sum_pair_closed(double a, double d, int count) {
    if (count < 1)
        throw std::invalid_argument("count must be >= 1");
    const double half = std::sin(d / 2.0);
    if (std::abs(half) < 1e-12)
        return {count * std::sin(a), count * std::cos(a)};
    const double prefac = std::sin(count * d / 2.0) / half;
    const double mid = a + (count - 1) * d / 2.0;
    return {prefac * std::sin(mid), prefac * std::cos(mid)};
}

} // namespace ybg
