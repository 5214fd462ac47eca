#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/document.hpp"

namespace leibniz::fixtures {

struct FixtureInfo {
  std::string name;  // literal name or pattern, e.g. "abelian-<n>"
  std::string description;
};

std::vector<FixtureInfo> catalog();

// Resolves a fixture name such as "example-3.2", "abelian-4",
// "filiform-leibniz-5", "heisenberg", "sl2-as-leibniz", "sl2-module-2" or
// "solvable-6-17" (dimension 6, seed 17). Throws Error(kUnknownLabel).
AlgebraDocument document(std::string_view name);
LeibnizAlgebra algebra(std::string_view name);

// Families. Dimensions are capped at 20.
LeibnizAlgebra abelian(std::size_t n);
// [e_i, e_1] = e_{i+1} for i < n.
LeibnizAlgebra filiform_leibniz(std::size_t n);
// Heisenberg Lie algebra of odd dimension n >= 3.
LeibnizAlgebra heisenberg(std::size_t n = 3);
// sl2 with basis e, f, h.
LeibnizAlgebra sl2();
// sl2 plus the m-dimensional irreducible module M acting on the right
// ([v, y] = -y.v, [y, v] = 0, [M, M] = 0); non-Lie for m >= 1.
LeibnizAlgebra sl2_module(std::size_t m);
// Solvable, non-nilpotent, non-Lie algebra of dimension n >= 3: a solvable
// Lie algebra with a right module, written in a random unimodular basis.
LeibnizAlgebra random_solvable(std::size_t n, std::uint64_t seed);

}  // namespace leibniz::fixtures
