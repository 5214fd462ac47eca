#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/cartan.hpp"
#include "leibniz/matrix.hpp"
#include "leibniz/subspace.hpp"

namespace leibniz {

// Two-sided ideal generated by all squares [x,x]: the span of [e_i,e_i] and
// [e_i,e_j] + [e_j,e_i], closed under left and right multiplication.
Subspace squares_ideal(const LeibnizAlgebra& algebra);

// The natural map L -> L/I onto the Lie algebra L/I, I = squares_ideal(L).
// Cosets are represented by the unit vectors at the non-pivot coordinates
// of I, so quotient basis element k is the image of e_{complement[k]}.
struct QuotientMap {
  LeibnizAlgebra source;
  Subspace ideal;
  LeibnizAlgebra quotient;
  std::vector<std::size_t> complement;
  Matrix projection;  // dim(L/I) x dim(L)
  Matrix section;     // dim(L) x dim(L/I)
};

// Throws Error(kQuotientNotLie) if the quotient fails the Leibniz identity or
// antisymmetry.
QuotientMap build_quotient(const LeibnizAlgebra& algebra);

Element push_element(const QuotientMap& map, const Vector& x);
Element push_element(const QuotientMap& map, const Element& x);
Subspace push_subspace(const QuotientMap& map, const Subspace& s);

struct RegularityPush {
  bool holds = false;
  std::size_t pushed_nullity = 0;  // nullity of the image element in L/I
  std::size_t quotient_rank = 0;   // min of sampled quotient rank and pushed_nullity
  RegularityReport quotient_search;
};

// Image of a regular element is regular in L/I: the pushed element's
// nullity is compared with the quotient rank found by the same sampler.
RegularityPush check_prop_regularity_push(const LeibnizAlgebra& algebra, const RegularityReport& report,
                                          std::uint64_t seed, std::size_t trials);

struct CartanPush {
  bool holds = false;
  Subspace image;
  CartanCertificate quotient_certificate;
};

// Image of a Cartan subalgebra is a Cartan subalgebra of L/I.
CartanPush check_thm_cartan_push(const LeibnizAlgebra& algebra, const CartanCertificate& cert);

}  // namespace leibniz
