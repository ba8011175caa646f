#include "ybg/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace ybg {

Mat::Mat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols, cxd{0.0, 0.0}) {
    if (rows == 0 || cols == 0)
        throw std::invalid_argument("matrix dimensions must be >= 1");
}

Mat::Mat(std::size_t rows, std::size_t cols, std::vector<cxd> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (rows == 0 || cols == 0)
        throw std::invalid_argument("matrix dimensions must be >= 1");
    if (a_.size() != rows * cols)
        throw std::invalid_argument("entry count does not match rows*cols");
}

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

Mat Mat::zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }

Mat &Mat::operator+=(const Mat &rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("shape mismatch in matrix addition");
    for (std::size_t k = 0; k < a_.size(); ++k)
        a_[k] += rhs.a_[k];
    return *this;
}

Mat &Mat::operator-=(const Mat &rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("shape mismatch in matrix subtraction");
    for (std::size_t k = 0; k < a_.size(); ++k)
        a_[k] -= rhs.a_[k];
    return *this;
}

Mat &Mat::operator*=(cxd s) {
    for (auto &x : a_)
        x *= s;
    return *this;
}

Mat operator+(Mat lhs, const Mat &rhs) { return lhs += rhs; }
Mat operator-(Mat lhs, const Mat &rhs) { return lhs -= rhs; }
Mat operator*(cxd s, Mat m) { return m *= s; }

Mat matmul(const Mat &a, const Mat &b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("inner dimension mismatch in matmul");
    Mat c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cxd aik = a(i, k);
            if (aik == cxd{0.0, 0.0})
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += aik * b(k, j);
        }
    return c;
}

Mat operator*(const Mat &a, const Mat &b) { return matmul(a, b); }

Mat kron(const Mat &a, const Mat &b) {
    Mat c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cxd aij = a(i, j);
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    c(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return c;
}

Mat dagger(const Mat &a) {
    Mat c(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            c(j, i) = std::conj(a(i, j));
    return c;
}

double frobenius_distance(const Mat &a, const Mat &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("shape mismatch in frobenius_distance");
    double s = 0.0;
    for (std::size_t k = 0; k < a.entries().size(); ++k)
        s += std::norm(a.entries()[k] - b.entries()[k]);
    return std::sqrt(s);
}

double frobenius_norm(const Mat &a) {
    double s = 0.0;
    for (const auto &x : a.entries())
        s += std::norm(x);
    return std::sqrt(s);
}

double unitarity_residual(const Mat &a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("unitarity test requires a square matrix");
    const Mat id = Mat::identity(a.rows());
    const Mat ad = dagger(a);
    return std::max(frobenius_distance(a * ad, id),
                    frobenius_distance(ad * a, id));
}

bool is_unitary(const Mat &a, double tol) {
    return unitarity_residual(a) <= tol;
}

Ket4::Ket4(std::array<cxd, 4> amplitudes) : amp_(amplitudes) {
    if (std::abs(norm() - 1.0) > 1e-9)
        throw std::invalid_argument("Ket4 amplitudes are not normalized");
}

Ket4 Ket4::normalized(std::array<cxd, 4> amplitudes) {
    double n = 0.0;
    for (const auto &x : amplitudes)
        n += std::norm(x);
    n = std::sqrt(n);
    if (n == 0.0)
        throw std::invalid_argument("cannot normalize the zero vector");
    for (auto &x : amplitudes)
        x /= n;
    return Ket4(amplitudes, unchecked_tag{});
}

Ket4 Ket4::basis(std::size_t index) {
    if (index >= 4)
        throw std::invalid_argument("basis index must be 0..3");
    std::array<cxd, 4> a{};
    a[index] = 1.0;
    return Ket4(a, unchecked_tag{});
}

double Ket4::norm() const {
    double n = 0.0;
    for (const auto &x : amp_)
        n += std::norm(x);
    return std::sqrt(n);
}

cxd inner(const Ket4 &a, const Ket4 &b) {
    cxd s{0.0, 0.0};
    for (std::size_t i = 0; i < 4; ++i)
        s += std::conj(a[i]) * b[i];
    return s;
}

Ket4 apply(const Mat &g, const Ket4 &v) {
    if (g.rows() != 4 || g.cols() != 4)
        throw std::invalid_argument("apply expects a 4x4 gate");
    std::array<cxd, 4> out{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            out[i] += g(i, j) * v[j];
    return Ket4(out); // norm check catches non-unitary gates

}

} // namespace ybg
