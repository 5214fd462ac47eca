#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "leibniz/matrix.hpp"
#include "leibniz/rational.hpp"

namespace leibniz {

struct SpectrumOptions {
  double tol_eig = 1e-8;  // eigenvalue clustering
  double tol_res = 1e-8;  // generalized-eigenspace residuals
};

struct SpectralComponent {
  std::complex<double> eigenvalue;
  std::optional<Rational> exact_eigenvalue;  // set when the eigenvalue is rational
  std::size_t multiplicity = 0;
  Eigen::MatrixXcd basis;  // n x multiplicity, unit-norm columns
  double residual = 0.0;   // max over columns of |(A - lambda I)^n v|
};

struct ComplexSpectrum {
  std::size_t ambient_dim = 0;
  std::vector<SpectralComponent> components;  // sorted by (real, imag)

  bool all_rational() const;
  std::size_t total_multiplicity() const;
  double max_residual() const;
};

// Generalized eigenspaces of a square rational matrix. Eigenvalues and
// multiplicities come from the exact characteristic polynomial; rational
// eigenvalues get exact eigenspaces, the rest are computed numerically.
// Throws Error(kFailsToSeparate) when two eigenvalues lie closer than
// 10 * tol_eig.
ComplexSpectrum generalized_eigenspaces(const Matrix& a, const SpectrumOptions& options = {});

// The rational eigenvalues of a square matrix with algebraic multiplicities,
// ascending. Irrational eigenvalues are omitted.
std::vector<std::pair<Rational, std::size_t>> rational_eigenvalues(const Matrix& a);

// Exact eigenvalues with algebraic multiplicities when every root of the
// characteristic polynomial is rational, std::nullopt otherwise.
std::optional<std::vector<std::pair<Rational, std::size_t>>> rational_spectrum(const Matrix& a);

Eigen::MatrixXd to_eigen(const Matrix& a);

}  // namespace leibniz
