#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "leibniz/matrix.hpp"
#include "leibniz/subspace.hpp"

namespace leibniz {

struct EchelonForm {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

// Unique reduced row echelon form, same shape as the input.
Matrix rref(const Matrix& m);
EchelonForm echelon(const Matrix& m);

std::size_t rank(const Matrix& m);
Rational determinant(const Matrix& m);
// Throws std::domain_error for singular input.
Matrix inverse(const Matrix& m);

// {v : m v = 0}, as a subspace of Q^{m.cols()}.
Subspace kernel(const Matrix& m);
// Column space of m, as a subspace of Q^{m.rows()}.
Subspace image(const Matrix& m);

// Matrix of m restricted to an m-invariant subspace, written in the
// subspace's canonical basis. Throws std::logic_error if s is not invariant.
Matrix restrict_to(const Matrix& m, const Subspace& s);

bool is_nilpotent(const Matrix& m);

// exp(m) = sum m^k / k! for nilpotent m. Throws Error(kNotNilpotent).
Matrix exp_nilpotent(const Matrix& m);

struct FittingPair {
  Subspace null_component;
  Subspace one_component;
  std::string source;
};

// Fitting decomposition of a square operator: null = ker(a^n), one = im(a^n).
// The invariance, nilpotency and invertibility properties are checked and a
// failure raises std::logic_error.
FittingPair fitting_pair(const Matrix& a, std::string source = "operator");

// Algebraic multiplicity of the eigenvalue 0.
std::size_t zero_root_order(const Matrix& a);

}  // namespace leibniz
