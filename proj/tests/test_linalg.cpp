#include <doctest.h>

#include "linalg.hpp"
#include "support.hpp"

using namespace anyonic;

TEST_CASE("hermitian eigensystem: known 2x2") {
  // [[2, i], [-i, 2]] has eigenvalues 1 and 3.
  Matrix h(2, 2);
  h(0, 0) = 2.0;
  h(1, 1) = 2.0;
  h(0, 1) = Complex(0.0, 1.0);
  h(1, 0) = Complex(0.0, -1.0);
  const EigenSystem sys = hermitian_eigensystem(h);
  CHECK(sys.values[0] == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(sys.values[1] == doctest::Approx(3.0).epsilon(1e-13));
}

TEST_CASE("hermitian eigensystem: reconstruction and unitarity") {
  auto rng = testing::make_rng(7);
  for (int n : {1, 2, 3, 5, 8, 12}) {
    for (int rep = 0; rep < 5; ++rep) {
      const Matrix h = testing::random_hermitian(rng, n);
      const EigenSystem sys = hermitian_eigensystem(h);

      CHECK(max_abs_diff(sys.vectors * sys.vectors.adjoint(), Matrix::identity(n)) < 1e-12);

      Matrix rebuilt(n, n);
      for (int k = 0; k < n; ++k)
        for (int r = 0; r < n; ++r)
          for (int c = 0; c < n; ++c)
            rebuilt(r, c) += sys.values[k] * sys.vectors(r, k) * std::conj(sys.vectors(c, k));
      CHECK(max_abs_diff(rebuilt, h) < 1e-11);

      for (size_t k = 1; k < sys.values.size(); ++k) CHECK(sys.values[k - 1] <= sys.values[k]);
    }
  }
}

TEST_CASE("expm of a Hermitian matrix") {
  // exp([[0,t],[t,0]]) = [[cosh t, sinh t], [sinh t, cosh t]].
  const double t = 0.3;
  Matrix h(2, 2);
  h(0, 1) = t;
  h(1, 0) = t;
  const Matrix e = expm_hermitian(h);
  CHECK(std::abs(e(0, 0) - Complex(std::cosh(t))) < 1e-13);
  CHECK(std::abs(e(0, 1) - Complex(std::sinh(t))) < 1e-13);

  auto rng = testing::make_rng(11);
  const Matrix g = testing::random_hermitian(rng, 4);
  const Matrix exp_g = expm_hermitian(g);
  // exp(g) exp(-g) = 1.
  CHECK(max_abs_diff(exp_g * expm_hermitian(Complex(-1.0) * g), Matrix::identity(4)) < 1e-11);
}

TEST_CASE("kron layout") {
  Matrix a(2, 2), b(2, 2);
  a(0, 0) = 1.0;
  a(0, 1) = 2.0;
  a(1, 0) = 3.0;
  a(1, 1) = 4.0;
  b(0, 0) = 0.0;
  b(0, 1) = 5.0;
  b(1, 0) = 6.0;
  b(1, 1) = 7.0;
  const Matrix k = kron(a, b);
  REQUIRE(k.rows() == 4);
  CHECK(k(0, 1) == Complex(5.0));
  CHECK(k(0, 3) == Complex(10.0));
  CHECK(k(3, 2) == Complex(24.0));
  CHECK(std::abs(k.trace() - a.trace() * b.trace()) < 1e-15);
}
