#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/matrix.hpp"
#include "leibniz/rational.hpp"

namespace leibniz {

// Univariate polynomial over Q, coefficients stored lowest degree first,
// without trailing zeros. The zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  // t - root
  static Polynomial linear_factor(const Rational& root) { return Polynomial({-root, 1}); }

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(); }
  Rational leading() const { return coeffs_.empty() ? Rational() : coeffs_.back(); }

  Rational operator()(const Rational& t) const;
  Polynomial derivative() const;
  Polynomial monic() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Quotient and remainder; throws std::domain_error on division by zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
// Monic gcd (zero if both are zero).
Polynomial gcd(Polynomial a, Polynomial b);

// det(t I - m), via Faddeev-LeVerrier.
Polynomial characteristic_polynomial(const Matrix& m);

// Yun's algorithm: p = c * prod_i f_i^i with f_i monic square-free and
// pairwise coprime. Entry i-1 of the result is f_i (possibly constant 1).
std::vector<Polynomial> squarefree_decomposition(const Polynomial& p);

// All complex roots (with multiplicity) from the companion matrix, refined
// by Newton steps. Accurate for square-free input.
std::vector<std::complex<double>> numeric_roots(const Polynomial& p);

// Distinct rational roots, ascending. Exact.
std::vector<Rational> rational_roots(const Polynomial& p);

}  // namespace leibniz
