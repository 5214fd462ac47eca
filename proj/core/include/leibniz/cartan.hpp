#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "leibniz/algebra.hpp"
#include "leibniz/linalg.hpp"
#include "leibniz/subspace.hpp"

namespace leibniz {

// Fitting decomposition of the algebra with respect to R_h.
FittingPair fitting_wrt_element(const LeibnizAlgebra& algebra, const Vector& h);
FittingPair fitting_wrt_element(const Element& h);

// Fitting decomposition with respect to the operator family R(s) of a
// nilpotent subalgebra s: the null component is the joint generalized
// kernel, the one component the stable image of the family. Throws
// kNotASubalgebra or kNotNilpotent.
FittingPair joint_fitting(const LeibnizAlgebra& algebra, const Subspace& s);

// An element b of s whose single-operator decomposition equals
// joint_fitting(s). Basis vectors of s are tried first, then seeded random
// integer combinations. Throws Error(kNotFound) after max_trials.
Element find_spanning_operator(const LeibnizAlgebra& algebra, const Subspace& s, std::uint64_t seed,
                               std::size_t max_trials = 64);

struct RegularityReport {
  Element element;
  std::size_t nullity = 0;  // dimension of the Fitting null component of R_element
  bool is_regular = false;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t candidates = 0;
  std::string field = "Q";
};

// Minimizes the Fitting null dimension over: every basis vector, every
// e_i + e_j and e_i - e_j (i < j), then `trials` random elements with
// integer coordinates in [-5, 5]. Ties go to the first candidate.
RegularityReport find_regular_element(const LeibnizAlgebra& algebra, std::uint64_t seed, std::size_t trials);

// {x : [x, s] in s}
Subspace left_normalizer(const LeibnizAlgebra& algebra, const Subspace& s);
// {x : [s, x] in s}
Subspace right_normalizer(const LeibnizAlgebra& algebra, const Subspace& s);

struct CartanCertificate {
  Subspace subalgebra;
  SeriesReport nilpotency_report;  // of s as an algebra in its own right
  Subspace left_normalizer;
  bool is_cartan = false;
  // Present when s is nilpotent: whether s equals the null component of the
  // joint Fitting decomposition with respect to R(s).
  std::optional<bool> equals_joint_null_component;
};

// Nilpotent and self-normalizing on the left. Throws kNotASubalgebra.
CartanCertificate is_cartan(const LeibnizAlgebra& algebra, const Subspace& s);

// Null component of R_a for a regular a, certified. Throws
// kCertificateFailed when the certificate does not verify.
CartanCertificate cartan_from_regular(const LeibnizAlgebra& algebra, const RegularityReport& report);

}  // namespace leibniz
