#include "leibniz/linalg.hpp"

#include <stdexcept>
#include <utility>

#include "leibniz/error.hpp"

namespace leibniz {

EchelonForm echelon(const Matrix& m) {
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = col; c < a.cols(); ++c) std::swap(a(pivot, c), a(row, c));
    }
    const Rational inv = Rational(1) / a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      const Rational factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        if (!a(row, c).is_zero()) a(r, c) -= factor * a(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

Matrix rref(const Matrix& m) { return echelon(m).reduced; }

std::size_t rank(const Matrix& m) { return echelon(m).pivots.size(); }

Rational determinant(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::kDimensionMismatch, "determinant of non-square matrix");
  Matrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t c = col; c < n; ++c) std::swap(a(pivot, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    const Rational inv = Rational(1) / a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      const Rational factor = a(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) a(r, c) -= factor * a(col, c);
    }
  }
  return det;
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::kDimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  EchelonForm e = echelon(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw std::domain_error("singular matrix");
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

Subspace kernel(const Matrix& m) {
  EchelonForm e = echelon(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v(n);
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return Subspace::span(n, basis);
}

Subspace image(const Matrix& m) { return Subspace::row_span(m.transpose()); }

Matrix restrict_to(const Matrix& m, const Subspace& s) {
  const std::size_t d = s.dim();
  Matrix out(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    const Vector w = m.apply(s.basis().row(i));
    if (!s.contains(w)) throw std::logic_error("restrict_to: subspace is not invariant");
    for (std::size_t j = 0; j < d; ++j) out(j, i) = w[s.pivots()[j]];
  }
  return out;
}

bool is_nilpotent(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::kDimensionMismatch, "is_nilpotent");
  return m.pow(m.rows()).is_zero();
}

Matrix exp_nilpotent(const Matrix& m) {
  if (!is_nilpotent(m)) throw Error(ErrorCode::kNotNilpotent, "exp of a non-nilpotent operator");
  const std::size_t n = m.rows();
  Matrix result = Matrix::identity(n);
  Matrix term = Matrix::identity(n);
  for (std::size_t k = 1; k < n; ++k) {
    term = term * m;
    if (term.is_zero()) break;
    term *= Rational(1, static_cast<long>(k));
    result += term;
  }
  return result;
}

FittingPair fitting_pair(const Matrix& a, std::string source) {
  if (!a.is_square()) throw Error(ErrorCode::kDimensionMismatch, "fitting_pair of non-square matrix");
  const std::size_t n = a.rows();
  const Matrix power = a.pow(n);
  FittingPair fp{kernel(power), image(power), std::move(source)};

  if (fp.null_component.dim() + fp.one_component.dim() != n ||
      !fp.null_component.intersect(fp.one_component).is_zero()) {
    throw std::logic_error("fitting_pair: components are not complementary");
  }
  if (!fp.null_component.is_invariant_under(a) || !fp.one_component.is_invariant_under(a)) {
    throw std::logic_error("fitting_pair: components are not invariant");
  }
  const Matrix on_null = restrict_to(a, fp.null_component);
  if (!on_null.pow(on_null.rows()).is_zero()) {
    throw std::logic_error("fitting_pair: operator not nilpotent on null component");
  }
  if (determinant(restrict_to(a, fp.one_component)).is_zero()) {
    throw std::logic_error("fitting_pair: operator not invertible on one component");
  }
  return fp;
}

std::size_t zero_root_order(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::kDimensionMismatch, "zero_root_order of non-square matrix");
  return a.rows() - rank(a.pow(a.rows()));
}

}  // namespace leibniz
