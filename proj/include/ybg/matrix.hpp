#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

namespace ybg {

using cxd = std::complex<double>;

/// Dense row-major complex matrix. Everything in this project is 2x2, 4x4 or
/// 8x8, so no attempt is made at being clever about storage.
class Mat {
  public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols);
    Mat(std::size_t rows, std::size_t cols, std::vector<cxd> entries);

    static Mat identity(std::size_t n);
    static Mat zero(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cxd &operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const cxd &operator()(std::size_t i, std::size_t j) const {
        return a_[i * cols_ + j];
    }

    const std::vector<cxd> &entries() const { return a_; }

    Mat &operator+=(const Mat &rhs);
    Mat &operator-=(const Mat &rhs);
    Mat &operator*=(cxd s);

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cxd> a_;
};

Mat operator+(Mat lhs, const Mat &rhs);
Mat operator-(Mat lhs, const Mat &rhs);
Mat operator*(cxd s, Mat m);

/// Matrix product. Throws std::invalid_argument on inner-dimension mismatch.
Mat matmul(const Mat &a, const Mat &b);
Mat operator*(const Mat &a, const Mat &b);

/// Kronecker product with the block convention
/// (a (x) b)[i*b.rows+k, j*b.cols+l] = a[i,j] * b[k,l].
Mat kron(const Mat &a, const Mat &b);

/// Conjugate transpose.
Mat dagger(const Mat &a);

/// sqrt(sum |a_ij - b_ij|^2). Throws on shape mismatch.
double frobenius_distance(const Mat &a, const Mat &b);

/// sqrt(sum |a_ij|^2).
double frobenius_norm(const Mat &a);

/// True iff both a*a^dag and a^dag*a are within tol of the identity in
/// Frobenius norm. Throws for non-square input.
bool is_unitary(const Mat &a, double tol);

/// max(||a a^dag - I||_F, ||a^dag a - I||_F); the residual is_unitary tests.
double unitarity_residual(const Mat &a);

/// Normalized two-qubit pure state, amplitudes ordered |00>,|01>,|10>,|11>.
/// Construction rejects vectors whose norm is off by more than 1e-9 unless
/// normalize() is requested.
class Ket4 {
  public:
    explicit Ket4(std::array<cxd, 4> amplitudes);
    static Ket4 normalized(std::array<cxd, 4> amplitudes);
    static Ket4 basis(std::size_t index);

    const std::array<cxd, 4> &amplitudes() const { return amp_; }
    cxd operator[](std::size_t i) const { return amp_[i]; }

    double norm() const;

  private:
    struct unchecked_tag {};
    Ket4(std::array<cxd, 4> amplitudes, unchecked_tag) : amp_(amplitudes) {}
    std::array<cxd, 4> amp_;
};

/// Inner product <a|b> (conjugate-linear in the first argument).
cxd inner(const Ket4 &a, const Ket4 &b);

/// g|v> for a 4x4 matrix g.
Ket4 apply(const Mat &g, const Ket4 &v);

} // namespace ybg
