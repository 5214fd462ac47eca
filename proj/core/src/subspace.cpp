#include "leibniz/subspace.hpp"

#include <algorithm>

#include "leibniz/error.hpp"
#include "leibniz/linalg.hpp"

namespace leibniz {

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "subspaces live in spaces of dimension " +
                                                   std::to_string(a.ambient_dim()) + " and " +
                                                   std::to_string(b.ambient_dim()));
  }
}

}  // namespace

Subspace Subspace::zero(std::size_t ambient_dim) { return Subspace(ambient_dim, Matrix(0, ambient_dim), {}); }

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<std::size_t> pivots(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) pivots[i] = i;
  return Subspace(ambient_dim, Matrix::identity(ambient_dim), std::move(pivots));
}

Subspace Subspace::span(std::size_t ambient_dim, std::span<const Vector> vectors) {
  return row_span(Matrix::from_rows(vectors, ambient_dim));
}

Subspace Subspace::row_span(const Matrix& rows) {
  EchelonForm e = echelon(rows);
  const std::size_t r = e.pivots.size();
  return Subspace(rows.cols(), e.reduced.row_block(0, r), std::move(e.pivots));
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t r = 0; r < dim(); ++r) out.push_back(basis_.row_vector(r));
  return out;
}

std::vector<std::size_t> Subspace::non_pivots() const {
  std::vector<std::size_t> out;
  std::size_t p = 0;
  for (std::size_t c = 0; c < ambient_dim_; ++c) {
    if (p < pivots_.size() && pivots_[p] == c) {
      ++p;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

Matrix Subspace::annihilator() const { return kernel(basis_).basis(); }

Vector Subspace::residual(std::span<const Rational> v) const {
  if (v.size() != ambient_dim_) throw Error(ErrorCode::kDimensionMismatch, "vector size");
  Vector w(v.begin(), v.end());
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Rational coeff = v[pivots_[i]];
    if (coeff.is_zero()) continue;
    auto row = basis_.row(i);
    for (std::size_t c = 0; c < ambient_dim_; ++c) {
      if (!row[c].is_zero()) w[c] -= coeff * row[c];
    }
  }
  return w;
}

bool Subspace::contains(std::span<const Rational> v) const { return leibniz::is_zero(residual(v)); }

bool Subspace::contains(const Subspace& other) const {
  require_same_ambient(*this, other);
  for (std::size_t r = 0; r < other.dim(); ++r) {
    if (!contains(other.basis_.row(r))) return false;
  }
  return true;
}

Vector Subspace::coordinates(std::span<const Rational> v) const {
  if (!contains(v)) throw std::logic_error("coordinates: vector not in subspace");
  Vector c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Subspace Subspace::sum(const Subspace& other) const {
  require_same_ambient(*this, other);
  return row_span(Matrix::vstack(basis_, other.basis_));
}

Subspace Subspace::intersect(const Subspace& other) const {
  require_same_ambient(*this, other);
  if (is_full()) return other;
  if (other.is_full()) return *this;
  return kernel(Matrix::vstack(annihilator(), other.annihilator()));
}

Subspace Subspace::image_under(const Matrix& m) const {
  if (m.cols() != ambient_dim_) throw Error(ErrorCode::kDimensionMismatch, "image_under");
  std::vector<Vector> images;
  images.reserve(dim());
  for (std::size_t r = 0; r < dim(); ++r) images.push_back(m.apply(basis_.row(r)));
  return span(m.rows(), images);
}

Subspace Subspace::preimage_under(const Matrix& m) const {
  if (m.rows() != ambient_dim_) throw Error(ErrorCode::kDimensionMismatch, "preimage_under");
  if (is_full()) return full(m.cols());
  return kernel(annihilator() * m);
}

bool Subspace::is_invariant_under(const Matrix& m) const {
  if (!m.is_square() || m.rows() != ambient_dim_) {
    throw Error(ErrorCode::kDimensionMismatch, "is_invariant_under");
  }
  for (std::size_t r = 0; r < dim(); ++r) {
    if (!contains(m.apply(basis_.row(r)))) return false;
  }
  return true;
}

std::string Subspace::to_string() const {
  std::string out = "span{";
  for (std::size_t r = 0; r < dim(); ++r) {
    if (r) out += "; ";
    out += leibniz::to_string(basis_.row(r));
  }
  return out + "}";
}

}  // namespace leibniz
