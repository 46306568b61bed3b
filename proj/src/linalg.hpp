#pragma once

#include <cassert>
#include <complex>
#include <vector>

namespace anyonic {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major. Target spaces are small (dimension
/// rarely above ~30), so everything is kept simple and allocation-friendly.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {
    assert(rows >= 0 && cols >= 0);
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Complex& operator()(int r, int c) {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    return data_[static_cast<size_t>(r) * cols_ + c];
  }
  const Complex& operator()(int r, int c) const {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    return data_[static_cast<size_t>(r) * cols_ + c];
  }

  const std::vector<Complex>& data() const { return data_; }

  Matrix adjoint() const {
    Matrix out(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
  }

  Complex trace() const {
    assert(rows_ == cols_);
    Complex t = 0.0;
    for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    for (size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    for (size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(Complex s) {
    for (auto& v : data_) v *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Complex s, Matrix a) { return a *= s; }
  friend Matrix operator*(Matrix a, Complex s) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    assert(a.cols_ == b.rows_);
    Matrix out(a.rows_, b.cols_);
    for (int r = 0; r < a.rows_; ++r)
      for (int k = 0; k < a.cols_; ++k) {
        const Complex ark = a(r, k);
        if (ark == Complex(0.0)) continue;
        for (int c = 0; c < b.cols_; ++c) out(r, c) += ark * b(k, c);
      }
    return out;
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& v : data_) m = std::max(m, std::abs(v));
    return m;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Complex> data_;
};

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  assert(a.rows() == b.rows() && a.cols() == b.cols());
  double m = 0.0;
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) m = std::max(m, std::abs(a(r, c) - b(r, c)));
  return m;
}

/// Largest |H - H†| entry; 0 for genuinely Hermitian input.
inline double hermiticity_residual(const Matrix& h) {
  assert(h.rows() == h.cols());
  double m = 0.0;
  for (int r = 0; r < h.rows(); ++r)
    for (int c = r; c < h.cols(); ++c) m = std::max(m, std::abs(h(r, c) - std::conj(h(c, r))));
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b);

struct EigenSystem {
  std::vector<double> values;  // ascending
  Matrix vectors;              // unitary; column k pairs with values[k]
};

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations. Input is symmetrized first, so tiny anti-Hermitian noise
/// is tolerated.
EigenSystem hermitian_eigensystem(const Matrix& h);

std::vector<double> hermitian_eigenvalues(const Matrix& h);

/// exp(h) for Hermitian h, via eigendecomposition.
Matrix expm_hermitian(const Matrix& h);

/// exp(h) together with the data needed for directional derivatives.
class HermitianExp {
 public:
  explicit HermitianExp(const Matrix& h);

  const Matrix& value() const { return exp_; }
  double trace() const;

  /// Frechet derivative D exp_h(b): d/dt exp(h + t b) at t = 0, for
  /// Hermitian b, via Loewner divided differences in the eigenbasis.
  Matrix directional(const Matrix& b) const;

 private:
  EigenSystem sys_;
  Matrix exp_;
};

}  // namespace anyonic
