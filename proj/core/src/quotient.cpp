#include "leibniz/quotient.hpp"

#include <stdexcept>

#include "leibniz/error.hpp"
#include "leibniz/linalg.hpp"

namespace leibniz {

Subspace squares_ideal(const LeibnizAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  std::vector<Vector> generators;
  for (std::size_t i = 0; i < n; ++i) {
    generators.push_back(algebra.product(i, i));
    for (std::size_t j = i + 1; j < n; ++j) generators.push_back(algebra.product(i, j) + algebra.product(j, i));
  }
  Subspace ideal = Subspace::span(n, generators);
  while (true) {
    std::vector<Vector> grown = ideal.basis_vectors();
    for (const auto& v : ideal.basis_vectors()) {
      for (std::size_t j = 0; j < n; ++j) {
        grown.push_back(algebra.bracket(v, unit_vector(n, j)));
        grown.push_back(algebra.bracket(unit_vector(n, j), v));
      }
    }
    Subspace next = Subspace::span(n, grown);
    if (next.dim() == ideal.dim()) break;
    ideal = std::move(next);
  }
  return ideal;
}

QuotientMap build_quotient(const LeibnizAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  Subspace ideal = squares_ideal(algebra);
  std::vector<std::size_t> complement = ideal.non_pivots();
  const std::size_t m = complement.size();

  Matrix projection(m, n);
  for (std::size_t c = 0; c < n; ++c) {
    const Vector reduced = ideal.residual(unit_vector(n, c));
    for (std::size_t k = 0; k < m; ++k) projection(k, c) = reduced[complement[k]];
  }
  Matrix section(n, m);
  for (std::size_t k = 0; k < m; ++k) section(complement[k], k) = 1;

  std::vector<std::string> names;
  for (auto c : complement) names.push_back(algebra.basis_names()[c]);
  std::vector<ProductEntry> entries;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const Vector image = projection.apply(algebra.product(complement[a], complement[b]));
      ProductEntry e{a, b, {}};
      for (std::size_t k = 0; k < m; ++k)
        if (!image[k].is_zero()) e.result.push_back({k, image[k]});
      if (!e.result.empty()) entries.push_back(std::move(e));
    }
  }
  LeibnizAlgebra quotient(std::move(names), std::move(entries), LeibnizAlgebra::Validation::kDeferred);
  if (!validate_leibniz(quotient).ok) {
    throw Error(ErrorCode::kQuotientNotLie, "quotient fails the Leibniz identity");
  }
  if (!is_lie(quotient)) throw Error(ErrorCode::kQuotientNotLie, "quotient is not antisymmetric");
  if (!(projection * section == Matrix::identity(m))) {
    throw std::logic_error("build_quotient: projection is not a left inverse of the section");
  }
  return {algebra, std::move(ideal), std::move(quotient), std::move(complement), std::move(projection),
          std::move(section)};
}

Element push_element(const QuotientMap& map, const Vector& x) {
  return map.quotient.element(map.projection.apply(x));
}

Element push_element(const QuotientMap& map, const Element& x) {
  if (!x.algebra().same_algebra(map.source)) {
    throw Error(ErrorCode::kAlgebraMismatch, "element is not in the source algebra");
  }
  return push_element(map, x.coords());
}

Subspace push_subspace(const QuotientMap& map, const Subspace& s) { return s.image_under(map.projection); }

RegularityPush check_prop_regularity_push(const LeibnizAlgebra& algebra, const RegularityReport& report,
                                          std::uint64_t seed, std::size_t trials) {
  const QuotientMap map = build_quotient(algebra);
  const Element pushed = push_element(map, report.element.coords());
  RegularityPush result{false, zero_root_order(right_mult(pushed)), 0,
                        find_regular_element(map.quotient, seed, trials)};
  result.quotient_rank = std::min(result.quotient_search.nullity, result.pushed_nullity);
  result.holds = report.is_regular && result.pushed_nullity == result.quotient_rank;
  return result;
}

CartanPush check_thm_cartan_push(const LeibnizAlgebra& algebra, const CartanCertificate& cert) {
  const QuotientMap map = build_quotient(algebra);
  Subspace image = push_subspace(map, cert.subalgebra);
  CartanCertificate qcert = is_cartan(map.quotient, image);
  const bool holds = cert.is_cartan && qcert.is_cartan;
  return {holds, std::move(image), std::move(qcert)};
}

}  // namespace leibniz
