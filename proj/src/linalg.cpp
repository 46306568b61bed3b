#include "linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace anyonic {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int ar = 0; ar < a.rows(); ++ar)
    for (int ac = 0; ac < a.cols(); ++ac) {
      const Complex v = a(ar, ac);
      if (v == Complex(0.0)) continue;
      for (int br = 0; br < b.rows(); ++br)
        for (int bc = 0; bc < b.cols(); ++bc)
          out(ar * b.rows() + br, ac * b.cols() + bc) = v * b(br, bc);
    }
  return out;
}

namespace {

double off_diagonal_norm2(const Matrix& m) {
  double s = 0.0;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (r != c) s += std::norm(m(r, c));
  return s;
}

}  // namespace

EigenSystem hermitian_eigensystem(const Matrix& h) {
  assert(h.rows() == h.cols());
  const int n = h.rows();

  // Work on the Hermitian part; callers may pass matrices with rounding fuzz.
  Matrix a(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a(r, c) = 0.5 * (h(r, c) + std::conj(h(c, r)));

  Matrix v = Matrix::identity(n);

  constexpr int kMaxSweeps = 100;
  const double scale = std::max(a.max_abs(), 1.0);
  const double stop = (scale * scale) * 1e-34 * n * n;

  for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_norm2(a) > stop; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag <= scale * 1e-18) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // w rotates a(p,q) onto the real axis: w * apq = |apq|.
        const Complex w = std::conj(apq) / mag;
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // Columns: [col_p, col_q] <- [c*col_p - s*w*col_q, s*conj(w)*col_p + c*col_q]
        for (int i = 0; i < n; ++i) {
          const Complex aip = a(i, p), aiq = a(i, q);
          a(i, p) = c * aip - s * w * aiq;
          a(i, q) = s * std::conj(w) * aip + c * aiq;
          const Complex vip = v(i, p), viq = v(i, q);
          v(i, p) = c * vip - s * w * viq;
          v(i, q) = s * std::conj(w) * vip + c * viq;
        }
        // Rows (left multiply by the adjoint rotation).
        for (int j = 0; j < n; ++j) {
          const Complex apj = a(p, j), aqj = a(q, j);
          a(p, j) = c * apj - s * std::conj(w) * aqj;
          a(q, j) = s * w * apj + c * aqj;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }

  EigenSystem sys;
  sys.values.resize(n);
  for (int i = 0; i < n; ++i) sys.values[i] = a(i, i).real();

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return sys.values[x] < sys.values[y]; });

  EigenSystem out;
  out.values.resize(n);
  out.vectors = Matrix(n, n);
  for (int k = 0; k < n; ++k) {
    out.values[k] = sys.values[order[k]];
    for (int i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const Matrix& h) {
  return hermitian_eigensystem(h).values;
}

Matrix expm_hermitian(const Matrix& h) {
  const EigenSystem sys = hermitian_eigensystem(h);
  const int n = h.rows();
  Matrix out(n, n);
  for (int k = 0; k < n; ++k) {
    const double ek = std::exp(sys.values[k]);
    for (int r = 0; r < n; ++r) {
      const Complex vr = sys.vectors(r, k);
      if (vr == Complex(0.0)) continue;
      for (int c = 0; c < n; ++c) out(r, c) += ek * vr * std::conj(sys.vectors(c, k));
    }
  }
  return out;
}

HermitianExp::HermitianExp(const Matrix& h) : sys_(hermitian_eigensystem(h)) {
  const int n = h.rows();
  exp_ = Matrix(n, n);
  for (int k = 0; k < n; ++k) {
    const double ek = std::exp(sys_.values[k]);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        exp_(r, c) += ek * sys_.vectors(r, k) * std::conj(sys_.vectors(c, k));
  }
}

double HermitianExp::trace() const {
  double t = 0.0;
  for (const double v : sys_.values) t += std::exp(v);
  return t;
}

Matrix HermitianExp::directional(const Matrix& b) const {
  const int n = exp_.rows();
  const Matrix bt = sys_.vectors.adjoint() * b * sys_.vectors;
  Matrix scaled(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const double lr = sys_.values[r], lc = sys_.values[c];
      // (e^lr - e^lc) / (lr - lc), continued across the diagonal.
      const double phi = (std::abs(lr - lc) < 1e-12)
                             ? std::exp(0.5 * (lr + lc))
                             : (std::exp(lr) - std::exp(lc)) / (lr - lc);
      scaled(r, c) = phi * bt(r, c);
    }
  return sys_.vectors * scaled * sys_.vectors.adjoint();
}

}  // namespace anyonic
