#pragma once

#include "ybg/matrix.hpp"

#include <utility>

namespace ybg {

/// The 2x2 rotation representing the a-th power of the order-n cyclic
/// generator: rotation by angle 2*a*pi/n. Requires n >= 2 and 0 <= a < n.
Mat rotation_rep(int n, int a);

/// The quasitriangular R-matrix of C_n obtained by literally summing all n^2
/// terms (1/n) * omega^{-ab} s^a (x) s^b. Kept as an independent oracle for
/// r_closed_form. Requires 2 <= n <= 4096.
Mat r_bruteforce(int n);

/// The same R-matrix in closed form: cos(2pi/n) on the diagonal,
/// -i sin(2pi/n) in the (0,3)/(3,0) corners, +i sin(2pi/n) at (1,2)/(2,1).
Mat r_closed_form(int n);

/// The two-qubit SWAP gate.
Mat swap_gate();

/// The braiding gate B_n = SWAP * R(n):
/// [[alpha,0,0,beta],[0,-beta,alpha,0],[0,alpha,-beta,0],[beta,0,0,alpha]]
/// with alpha = cos(2pi/n), beta = -i sin(2pi/n).
Mat bn_gate(int n);

/// (sum_{b=0}^{count-1} sin(a+b*d), sum cos(a+b*d)), evaluated directly.
/// For d not a multiple of 2pi the arithmetic-progression closed form
/// sin(count*d/2)*{sin,cos}(a+(count-1)*d/2)/sin(d/2) agrees to 1e-12.
std::pair<double, double> trig_sum_pair(double a, double d, int count);

/// Closed-form counterpart of trig_sum_pair (handles d ~ 0 by the limit
/// count*{sin,cos}(a)).
std::pair<double, double> trig_sum_pair_closed(double a, double d, int count);

} // namespace ybg
