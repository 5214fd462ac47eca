#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/matrix.hpp"
#include "leibniz/spectrum.hpp"
#include "leibniz/subspace.hpp"

namespace leibniz {

struct WeightComponent {
  std::complex<double> weight;
  std::optional<Rational> exact_weight;
  std::size_t dim = 0;
  Eigen::MatrixXcd space;              // n x dim, numerical
  std::optional<Subspace> exact_space;  // generalized eigenspace over Q, for rational weights
  double residual = 0.0;
};

struct WeightDecomposition {
  Element base;
  std::vector<WeightComponent> components;
  Subspace zero_component;  // exact Fitting null component of R_base
};

// Generalized eigenspaces of R_b. The zero-weight space is cross-checked
// against the exact Fitting null component. Propagates kFailsToSeparate.
WeightDecomposition weight_decomposition(const LeibnizAlgebra& algebra, const Vector& b,
                                         const SpectrumOptions& options = {});

// A product of exponentials exp(R_z) of nilpotent right multiplications.
// generators[0] is applied first, so matrix = E(z_k) ... E(z_1).
struct Automorphism {
  Matrix matrix;
  std::vector<Vector> generators;

  Subspace apply(const Subspace& s) const { return s.image_under(matrix); }
  Vector apply(const Vector& v) const { return matrix.apply(v); }
};

// delta is invertible and delta[a,b] = [delta a, delta b] on all basis pairs.
bool is_automorphism(const LeibnizAlgebra& algebra, const Matrix& delta);

Automorphism identity_automorphism(const LeibnizAlgebra& algebra);
// exp(R_z), computed exactly. Throws Error(kNotNilpotent).
Automorphism exp_automorphism(const LeibnizAlgebra& algebra, const Vector& z);
// `outer` after `inner`.
Automorphism compose(const Automorphism& outer, const Automorphism& inner);
Automorphism inverse(const Automorphism& delta);

struct Lemma31Check {
  bool conclusion = false;  // x - x0 lies in the squares ideal
  Vector x0;                // component of x in the Fitting null space of R_b
  Vector difference;        // x - x0
};

// Checks that x + I = x0 + I, given the hypotheses: the Fitting null
// component of R_b is a Cartan subalgebra, x R_b^k lies in I, and x != x0.
// A failing hypothesis throws Error(kHypothesisViolated) naming the clause.
Lemma31Check verify_lemma31(const LeibnizAlgebra& algebra, const Vector& x, const Vector& b, std::size_t k);

struct ConjugationOptions {
  std::uint64_t seed = 0;
  std::size_t budget = 10'000;    // candidate compositions examined
  std::size_t max_length = 4;     // generators per composition
  std::size_t spanning_trials = 64;
};

struct ConjugationResult {
  Automorphism automorphism;
  std::size_t candidates = 0;
  std::size_t generator_pool = 0;
  std::string phase;  // "identity", "enumeration" or "random"
};

// Nilpotent root vectors used as conjugator generators: exact generalized
// eigenvectors of R_b for the nonzero rational eigenvalues of a spanning
// element b of the Cartan subalgebra c, with R_v nilpotent and nonzero.
std::vector<Vector> root_generators(const LeibnizAlgebra& algebra, const Subspace& c, std::uint64_t seed);

// Searches for an invariant automorphism delta with delta(c1) = c2.
// Compositions are enumerated by length with prefix coefficients from
// {1, -1, 1/2, -1/2, 2, -2}; the coefficient of the last generator is
// solved exactly (rational roots of the orbit condition). Leftover budget
// goes to seeded random prefixes. Throws kNotCartan if either input is not
// Cartan and kNotFound when the budget runs out.
ConjugationResult conjugate_cartan(const LeibnizAlgebra& algebra, const Subspace& c1, const Subspace& c2,
                                   const ConjugationOptions& options = {});

}  // namespace leibniz
