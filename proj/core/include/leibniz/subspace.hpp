#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "leibniz/matrix.hpp"

namespace leibniz {

// A linear subspace of Q^n stored canonically: the basis is the reduced row
// echelon form of any spanning set with zero rows removed. Equality of
// subspaces is therefore equality of basis matrices.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);
  static Subspace span(std::size_t ambient_dim, std::span<const Vector> vectors);
  // Row span of `rows`.
  static Subspace row_span(const Matrix& rows);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_dim_; }

  const Matrix& basis() const { return basis_; }
  std::vector<Vector> basis_vectors() const;
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  // Coordinates not used as pivots; the unit vectors at these positions
  // span a complement of this subspace.
  std::vector<std::size_t> non_pivots() const;

  // Rows of a matrix whose kernel is exactly this subspace.
  Matrix annihilator() const;

  bool contains(std::span<const Rational> v) const;
  bool contains(const Subspace& other) const;
  // v minus its reduction along the basis; zero iff v lies in the subspace.
  Vector residual(std::span<const Rational> v) const;
  // Coefficients of v in basis(); requires contains(v).
  Vector coordinates(std::span<const Rational> v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  // Image of the subspace under the linear map m (ambient -> m.rows()).
  Subspace image_under(const Matrix& m) const;
  // {v : m v in this subspace}.
  Subspace preimage_under(const Matrix& m) const;
  bool is_invariant_under(const Matrix& m) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

  std::string to_string() const;

 private:
  Subspace(std::size_t ambient_dim, Matrix basis, std::vector<std::size_t> pivots)
      : ambient_dim_(ambient_dim), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  std::size_t ambient_dim_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace leibniz
