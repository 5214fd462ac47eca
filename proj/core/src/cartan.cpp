#include "leibniz/cartan.hpp"

#include <limits>
#include <stdexcept>

#include "leibniz/error.hpp"
#include "leibniz/random.hpp"

namespace leibniz {

FittingPair fitting_wrt_element(const LeibnizAlgebra& algebra, const Vector& h) {
  return fitting_pair(algebra.right_mult(h), "R_{" + algebra.format(h) + "}");
}

FittingPair fitting_wrt_element(const Element& h) { return fitting_wrt_element(h.algebra(), h.coords()); }

namespace {

void require_nilpotent_subalgebra(const LeibnizAlgebra& algebra, const Subspace& s) {
  if (!lower_central_series(subalgebra_structure(algebra, s)).nilpotent) {
    throw Error(ErrorCode::kNotNilpotent, "subalgebra " + s.to_string() + " is not nilpotent");
  }
}

}  // namespace

FittingPair joint_fitting(const LeibnizAlgebra& algebra, const Subspace& s) {
  require_nilpotent_subalgebra(algebra, s);
  const std::size_t n = algebra.dim();
  const std::vector<Matrix> family = right_operator_family(algebra, s);

  Subspace null = Subspace::full(n);
  for (const auto& op : family) null = null.intersect(kernel(op.pow(n)));
  // Largest subspace of `null` invariant under every generator.
  while (true) {
    Subspace refined = null;
    for (const auto& op : family) refined = refined.intersect(null.preimage_under(op));
    if (refined.dim() == null.dim()) break;
    null = std::move(refined);
  }

  Subspace one = Subspace::full(n);
  while (true) {
    Subspace next = Subspace::zero(n);
    for (const auto& op : family) next = next.sum(one.image_under(op));
    if (next.dim() == one.dim()) break;
    one = std::move(next);
  }

  if (null.dim() + one.dim() != n || !null.intersect(one).is_zero()) {
    throw std::logic_error("joint_fitting: components are not complementary");
  }
  for (const auto& op : family) {
    if (!null.is_invariant_under(op) || !one.is_invariant_under(op)) {
      throw std::logic_error("joint_fitting: components are not invariant");
    }
  }
  return {std::move(null), std::move(one), "R(" + s.to_string() + ")"};
}

Element find_spanning_operator(const LeibnizAlgebra& algebra, const Subspace& s, std::uint64_t seed,
                               std::size_t max_trials) {
  const FittingPair joint = joint_fitting(algebra, s);
  const auto basis = s.basis_vectors();
  auto matches = [&](const Vector& b) {
    const FittingPair single = fitting_wrt_element(algebra, b);
    return single.null_component == joint.null_component && single.one_component == joint.one_component;
  };
  if (basis.empty()) return algebra.zero();
  std::size_t tried = 0;
  for (const auto& b : basis) {
    if (tried++ >= max_trials) break;
    if (matches(b)) return algebra.element(b);
  }
  Random rng(seed);
  while (tried < max_trials) {
    ++tried;
    Vector b = zero_vector(algebra.dim());
    bool nonzero = false;
    for (const auto& v : basis) {
      const long c = rng.integer(-5, 5);
      if (c == 0) continue;
      nonzero = true;
      b = b + Rational(c) * v;
    }
    if (nonzero && matches(b)) return algebra.element(std::move(b));
  }
  throw Error(ErrorCode::kNotFound, "no spanning operator for " + s.to_string() + " within " +
                                        std::to_string(max_trials) + " trials");
}

RegularityReport find_regular_element(const LeibnizAlgebra& algebra, std::uint64_t seed, std::size_t trials) {
  const std::size_t n = algebra.dim();
  RegularityReport report{algebra.zero(), std::numeric_limits<std::size_t>::max(), true, trials, seed, 0, "Q"};
  auto consider = [&](Vector candidate) {
    ++report.candidates;
    const std::size_t nullity = zero_root_order(algebra.right_mult(candidate));
    if (nullity < report.nullity) {
      report.nullity = nullity;
      report.element = algebra.element(std::move(candidate));
    }
  };
  for (std::size_t i = 0; i < n; ++i) consider(unit_vector(n, i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      consider(unit_vector(n, i) + unit_vector(n, j));
      consider(unit_vector(n, i) - unit_vector(n, j));
    }
  }
  Random rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    Vector v(n);
    for (auto& x : v) x = Rational(rng.integer(-5, 5));
    consider(std::move(v));
  }
  if (report.candidates == 0) report.nullity = 0;
  return report;
}

namespace {

template <typename OperatorOf>
Subspace normalizer(const LeibnizAlgebra& algebra, const Subspace& s, OperatorOf op_of) {
  if (s.ambient_dim() != algebra.dim()) throw Error(ErrorCode::kDimensionMismatch, "normalizer");
  if (s.is_zero() || s.is_full()) return Subspace::full(algebra.dim());
  const Matrix ann = s.annihilator();
  Matrix constraints(0, algebra.dim());
  for (const auto& b : s.basis_vectors()) constraints = Matrix::vstack(constraints, ann * op_of(b));
  return kernel(constraints);
}

}  // namespace

Subspace left_normalizer(const LeibnizAlgebra& algebra, const Subspace& s) {
  return normalizer(algebra, s, [&](const Vector& b) { return algebra.right_mult(b); });
}

Subspace right_normalizer(const LeibnizAlgebra& algebra, const Subspace& s) {
  return normalizer(algebra, s, [&](const Vector& b) { return algebra.left_mult(b); });
}

CartanCertificate is_cartan(const LeibnizAlgebra& algebra, const Subspace& s) {
  CartanCertificate cert;
  cert.subalgebra = s;
  cert.nilpotency_report = lower_central_series(subalgebra_structure(algebra, s));
  cert.left_normalizer = left_normalizer(algebra, s);
  cert.is_cartan = cert.nilpotency_report.nilpotent && cert.left_normalizer == s;
  if (cert.nilpotency_report.nilpotent) {
    cert.equals_joint_null_component = joint_fitting(algebra, s).null_component == s;
  }
  return cert;
}

CartanCertificate cartan_from_regular(const LeibnizAlgebra& algebra, const RegularityReport& report) {
  if (!report.is_regular) {
    throw Error(ErrorCode::kHypothesisViolated, "element " + report.element.to_string() + " is not marked regular");
  }
  const FittingPair fp = fitting_wrt_element(algebra, report.element.coords());
  if (!is_subalgebra(algebra, fp.null_component)) {
    throw Error(ErrorCode::kCertificateFailed,
                "null component of " + fp.source + " is not a subalgebra; the element is not regular");
  }
  CartanCertificate cert = is_cartan(algebra, fp.null_component);
  if (!cert.is_cartan) {
    throw Error(ErrorCode::kCertificateFailed,
                "null component of " + fp.source + " is not a Cartan subalgebra; the element is not regular");
  }
  return cert;
}

}  // namespace leibniz
