#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "leibniz/matrix.hpp"
#include "leibniz/rational.hpp"
#include "leibniz/subspace.hpp"

namespace leibniz {

struct ProductTerm {
  std::size_t basis = 0;
  Rational coeff;
  friend bool operator==(const ProductTerm&, const ProductTerm&) = default;
};

// [e_left, e_right] = sum of coeff * e_basis. Indices are 0-based.
struct ProductEntry {
  std::size_t left = 0;
  std::size_t right = 0;
  std::vector<ProductTerm> result;
  friend bool operator==(const ProductEntry&, const ProductEntry&) = default;
};

class Element;

// Finite-dimensional algebra given by structure constants, satisfying the
// (right) Leibniz identity [x,[y,z]] = [[x,y],z] - [[x,z],y].
//
// Instances are immutable and cheap to copy; copies share the same table
// and compare as the same algebra.
class LeibnizAlgebra {
 public:
  enum class Validation { kEnforce, kDeferred };

  // Throws Error with kUnknownLabel / kDuplicateEntry for malformed tables
  // and kValidationError when the Leibniz identity fails (unless deferred).
  LeibnizAlgebra(std::vector<std::string> basis_names, std::vector<ProductEntry> entries,
                 Validation validation = Validation::kEnforce);

  std::size_t dim() const;
  const std::vector<std::string>& basis_names() const;
  std::optional<std::size_t> index_of(const std::string& name) const;
  // Normalized table: sorted by (left, right), zero terms and empty products dropped.
  const std::vector<ProductEntry>& entries() const;
  // Coordinates of [e_i, e_j].
  const Vector& product(std::size_t i, std::size_t j) const;

  Vector bracket(const Vector& x, const Vector& y) const;
  // Column j holds [e_j, x].
  Matrix right_mult(const Vector& x) const;
  // Column j holds [x, e_j].
  Matrix left_mult(const Vector& x) const;

  Element element(Vector coords) const;
  Element basis_element(std::size_t i) const;
  Element zero() const;

  bool same_algebra(const LeibnizAlgebra& other) const { return data_ == other.data_; }

  std::string format(const Vector& coords) const;

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

class Element {
 public:
  Element(LeibnizAlgebra algebra, Vector coords);

  const LeibnizAlgebra& algebra() const { return algebra_; }
  const Vector& coords() const { return coords_; }
  bool is_zero() const { return leibniz::is_zero(coords_); }
  std::string to_string() const { return algebra_.format(coords_); }

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Rational& s, const Element& a);
  friend bool operator==(const Element& a, const Element& b);

 private:
  LeibnizAlgebra algebra_;
  Vector coords_;
};

// Throws Error(kAlgebraMismatch) when x and y belong to different algebras.
Element bracket(const Element& x, const Element& y);
Matrix right_mult(const Element& x);
Matrix left_mult(const Element& x);

struct LeibnizDefect {
  std::size_t i = 0, j = 0, k = 0;
  Vector defect;  // [e_i,[e_j,e_k]] - [[e_i,e_j],e_k] + [[e_i,e_k],e_j]
};

struct ValidationReport {
  bool ok = true;
  std::vector<LeibnizDefect> failures;
};

ValidationReport validate_leibniz(const LeibnizAlgebra& algebra);

// R_x R_y - R_y R_x == R_{[y,x]}, exactly.
bool commutation_identity_check(const LeibnizAlgebra& algebra, const Vector& x, const Vector& y);

struct SeriesReport {
  // L^1 = L, L^{k+1} = [L^k, L], up to and including the first term that
  // equals its successor.
  std::vector<Subspace> terms;
  bool nilpotent = false;
  std::size_t stabilization_index = 0;  // 1-based index of the last term
};

SeriesReport lower_central_series(const LeibnizAlgebra& algebra);
bool is_nilpotent(const LeibnizAlgebra& algebra);
// [x,x] = 0 for all x.
bool is_lie(const LeibnizAlgebra& algebra);

bool is_subalgebra(const LeibnizAlgebra& algebra, const Subspace& s);
// [L, s] in s.
bool is_left_ideal(const LeibnizAlgebra& algebra, const Subspace& s);
// [s, L] in s.
bool is_right_ideal(const LeibnizAlgebra& algebra, const Subspace& s);
bool is_ideal(const LeibnizAlgebra& algebra, const Subspace& s);

// R_b for the canonical basis b of a subalgebra s. Throws Error(kNotASubalgebra).
std::vector<Matrix> right_operator_family(const LeibnizAlgebra& algebra, const Subspace& s);

// The subalgebra s as an algebra in its own right, in the canonical basis of s.
// Throws Error(kNotASubalgebra).
LeibnizAlgebra subalgebra_structure(const LeibnizAlgebra& algebra, const Subspace& s);

}  // namespace leibniz
