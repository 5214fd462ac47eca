#include <gtest/gtest.h>

#include "test_util.hpp"

namespace leibniz {
namespace {

using testing::random_matrix;
using testing::random_vector;
using testing::span_of;
using testing::vec;

const std::vector<std::string> kLibrary{
    "example-3.1",    "example-3.2",  "abelian-3",     "filiform-leibniz-5", "heisenberg",
    "heisenberg-5",   "sl2-as-leibniz", "sl2-module-2", "sl2-module-3",       "solvable-5-1",
    "solvable-6-2",   "solvable-7-3", "solvable-8-4",
};

// Non-nilpotent, non-Lie fixtures: the ones where the squares ideal meets a
// nontrivial Fitting one component.
const std::vector<std::string> kLeibnizSolvable{
    "example-3.1", "example-3.2", "sl2-module-2", "sl2-module-3", "solvable-5-1", "solvable-6-2", "solvable-7-3",
};

std::vector<LeibnizAlgebra> random_solvable_set(std::size_t count) {
  std::vector<LeibnizAlgebra> out;
  for (std::uint64_t seed = 0; seed < count; ++seed) out.push_back(fixtures::random_solvable(3 + seed % 6, 1000 + seed));
  return out;
}

void expect_fitting_properties(const Matrix& a, const FittingPair& p) {
  const std::size_t n = a.rows();
  EXPECT_EQ(p.null_component.sum(p.one_component), Subspace::full(n));
  EXPECT_EQ(p.null_component.intersect(p.one_component), Subspace::zero(n));
  EXPECT_TRUE(p.null_component.is_invariant_under(a));
  EXPECT_TRUE(p.one_component.is_invariant_under(a));
  if (p.null_component.dim() > 0) {
    const Matrix restricted = restrict_to(a, p.null_component);
    EXPECT_TRUE(restricted.pow(restricted.rows()).is_zero());
  }
  if (p.one_component.dim() > 0) {
    EXPECT_FALSE(determinant(restrict_to(a, p.one_component)).is_zero());
  }
  EXPECT_EQ(kernel(a.pow(n)).dim() + rank(a.pow(n)), n);
}

TEST(FittingProperty, RandomOperators) {
  Random rng(101);
  for (int t = 0; t < 220; ++t) {
    const std::size_t n = 1 + t % 7;
    Matrix a = random_matrix(rng, n, n, 2);
    // Force a nontrivial null component half of the time.
    if (t % 2 == 0) {
      for (std::size_t i = 0; i < n; ++i) a(i, 0) = 0;
    }
    expect_fitting_properties(a, fitting_pair(a));
  }
}

TEST(FittingProperty, AlgebraElementPairs) {
  Random rng(102);
  int pairs = 0;
  for (const auto& name : kLibrary) {
    const LeibnizAlgebra l = fixtures::algebra(name);
    for (int t = 0; t < 5; ++t) {
      const Vector h = random_vector(rng, l.dim());
      const FittingPair p = fitting_wrt_element(l, h);
      expect_fitting_properties(l.right_mult(h), p);
      ++pairs;
    }
  }
  EXPECT_GE(pairs, 50);
}

TEST(LeibnizProperty, ValidationMatchesCommutationIdentity) {
  Random rng(103);
  auto check = [](const LeibnizAlgebra& l) {
    bool all = true;
    for (std::size_t i = 0; i < l.dim(); ++i)
      for (std::size_t j = 0; j < l.dim(); ++j)
        all = all && commutation_identity_check(l, l.basis_element(i).coords(), l.basis_element(j).coords());
    return all;
  };
  for (const auto& name : kLibrary) {
    const LeibnizAlgebra l = fixtures::algebra(name);
    EXPECT_TRUE(validate_leibniz(l).ok);
    EXPECT_TRUE(check(l)) << name;
  }
  int invalid = 0;
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 2 + t % 3;
    std::vector<ProductEntry> entries;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (rng.integer(0, 2) != 0) continue;
        entries.push_back({i, j, {{static_cast<std::size_t>(rng.integer(0, static_cast<long>(n) - 1)), rng.integer(-2, 2)}}});
      }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("b" + std::to_string(i));
    const LeibnizAlgebra l(names, entries, LeibnizAlgebra::Validation::kDeferred);
    const bool valid = validate_leibniz(l).ok;
    invalid += valid ? 0 : 1;
    EXPECT_EQ(valid, check(l));
  }
  EXPECT_GT(invalid, 10);
}

TEST(LeibnizProperty, RightMultiplicationIsDegenerate) {
  Random rng(104);
  std::vector<LeibnizAlgebra> algebras;
  for (const auto& name : kLibrary) algebras.push_back(fixtures::algebra(name));
  for (auto& l : random_solvable_set(10)) algebras.push_back(l);
  for (const auto& l : algebras) {
    for (std::size_t i = 0; i < l.dim(); ++i) EXPECT_TRUE(determinant(l.right_mult(l.basis_element(i).coords())).is_zero());
    for (int t = 0; t < 100; ++t) EXPECT_TRUE(determinant(l.right_mult(random_vector(rng, l.dim(), 9))).is_zero());
    EXPECT_GE(find_regular_element(l, 7, 16).nullity, 1u);
  }
}

TEST(LeibnizProperty, BracketIsBilinear) {
  Random rng(105);
  for (const auto& name : kLibrary) {
    const LeibnizAlgebra l = fixtures::algebra(name);
    for (int t = 0; t < 20; ++t) {
      const Vector x = random_vector(rng, l.dim()), y = random_vector(rng, l.dim()), z = random_vector(rng, l.dim());
      const Rational a(rng.integer(-4, 4), rng.integer(1, 3)), b(rng.integer(-4, 4), rng.integer(1, 3));
      EXPECT_EQ(l.bracket(a * x + b * y, z), a * l.bracket(x, z) + b * l.bracket(y, z));
      EXPECT_EQ(l.bracket(x, a * y + b * z), a * l.bracket(x, y) + b * l.bracket(x, z));
    }
  }
}

TEST(LeibnizProperty, NilpotentAlgebrasHaveNilpotentOperators) {
  Random rng(106);
  for (const char* name : {"abelian-4", "filiform-leibniz-6", "heisenberg", "heisenberg-7"}) {
    const LeibnizAlgebra l = fixtures::algebra(name);
    ASSERT_TRUE(lower_central_series(l).nilpotent);
    for (int t = 0; t < 20; ++t) EXPECT_TRUE(is_nilpotent(l.right_mult(random_vector(rng, l.dim()))));
  }
}

// Nilpotent subalgebras, Cartan and not, drawn from across the library.
std::vector<std::pair<LeibnizAlgebra, Subspace>> nilpotent_subalgebra_fixtures() {
  std::vector<std::pair<LeibnizAlgebra, Subspace>> out;
  auto add = [&](const LeibnizAlgebra& l, const Subspace& s) {
    if (is_subalgebra(l, s) && is_nilpotent(subalgebra_structure(l, s))) out.emplace_back(l, s);
  };
  Random rng(107);
  std::vector<LeibnizAlgebra> algebras;
  for (const auto& name : kLibrary) algebras.push_back(fixtures::algebra(name));
  for (auto& l : random_solvable_set(12)) algebras.push_back(l);
  for (const auto& l : algebras) {
    const std::size_t n = l.dim();
    const CartanCertificate cert = cartan_from_regular(l, find_regular_element(l, 3, 16));
    add(l, cert.subalgebra);
    add(l, squares_ideal(l));
    add(l, Subspace::zero(n));
    for (const auto& v : cert.subalgebra.basis_vectors()) add(l, Subspace::span(n, std::vector<Vector>{v}));
    for (int t = 0; t < 4; ++t) {
      const Vector x = random_vector(rng, n);
      add(l, Subspace::span(n, std::vector<Vector>{x}));
      add(l, cert.subalgebra.sum(Subspace::span(n, std::vector<Vector>{x})));
    }
    for (std::size_t i = 0; i < n; ++i) add(l, Subspace::span(n, std::vector<Vector>{l.basis_element(i).coords()}));
  }
  const LeibnizAlgebra ext = fixtures::algebra("example-3.2");
  add(ext, span_of(5, {{1, 0, 0, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}}));
  return out;
}

TEST(CartanProperty, NormalizerCriterionMatchesJointNullComponent) {
  const auto cases = nilpotent_subalgebra_fixtures();
  ASSERT_GE(cases.size(), 50u);
  std::size_t cartan = 0;
  for (const auto& [l, s] : cases) {
    const CartanCertificate cert = is_cartan(l, s);
    const bool joint = joint_fitting(l, s).null_component == s;
    EXPECT_EQ(cert.is_cartan, joint) << s.to_string();
    ASSERT_TRUE(cert.equals_joint_null_component.has_value());
    EXPECT_EQ(*cert.equals_joint_null_component, joint);
    cartan += cert.is_cartan ? 1 : 0;
  }
  EXPECT_GE(cartan, 20u);
  EXPECT_GE(cases.size() - cartan, 20u);
}

TEST(CartanProperty, RegularElementsGiveCartanSubalgebras) {
  std::vector<LeibnizAlgebra> algebras;
  for (const auto& name : kLibrary) algebras.push_back(fixtures::algebra(name));
  for (auto& l : random_solvable_set(20)) algebras.push_back(l);
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    for (const auto& l : algebras) {
      const RegularityReport r = find_regular_element(l, seed, 24);
      const CartanCertificate cert = cartan_from_regular(l, r);
      EXPECT_TRUE(cert.is_cartan);
      EXPECT_EQ(cert.subalgebra.dim(), r.nullity);
    }
  }
}

TEST(CartanProperty, NullComponentDeterminedByRegularElement) {
  Random rng(108);
  for (const auto& name : kLibrary) {
    const LeibnizAlgebra l = fixtures::algebra(name);
    const std::size_t rank = find_regular_element(l, 0, 32).nullity;
    std::vector<std::pair<Vector, Subspace>> regular;
    for (int t = 0; t < 30 && regular.size() < 8; ++t) {
      const Vector a = random_vector(rng, l.dim(), 3);
      const Subspace n = fitting_wrt_element(l, a).null_component;
      if (n.dim() == rank) regular.emplace_back(a, n);
    }
    for (const auto& [a, n] : regular)
      for (const auto& [b, m] : regular)
        if (m.contains(a) && n.contains(b)) {
          EXPECT_EQ(n, m) << name;
        }
  }
}

TEST(CartanProperty, CartanSubalgebrasHaveRankDimension) {
  for (const auto& name : kLibrary) {
    const LeibnizAlgebra l = fixtures::algebra(name);
    const std::size_t rank = find_regular_element(l, 0, 32).nullity;
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      const CartanCertificate c = cartan_from_regular(l, find_regular_element(l, seed, 8));
      EXPECT_EQ(c.subalgebra.dim(), rank) << name;
    }
  }
}

TEST(QuotientProperty, QuotientIsLieAndIdealAbelian) {
  std::vector<LeibnizAlgebra> algebras;
  for (const auto& name : kLibrary) algebras.push_back(fixtures::algebra(name));
  for (auto& l : random_solvable_set(10)) algebras.push_back(l);
  for (const auto& l : algebras) {
    const QuotientMap q = build_quotient(l);
    const LeibnizAlgebra& g = q.quotient;
    const std::size_t m = g.dim();
    for (std::size_t i = 0; i < m; ++i) {
      EXPECT_TRUE(is_zero(g.product(i, i)));
      for (std::size_t j = 0; j < m; ++j) {
        EXPECT_EQ(g.product(i, j), Rational(-1) * g.product(j, i));
        for (std::size_t k = 0; k < m; ++k) {
          const Vector x = g.basis_element(i).coords(), y = g.basis_element(j).coords(), z = g.basis_element(k).coords();
          const Vector jacobi = g.bracket(x, g.bracket(y, z)) + g.bracket(y, g.bracket(z, x)) + g.bracket(z, g.bracket(x, y));
          EXPECT_TRUE(is_zero(jacobi));
        }
      }
    }
    for (const auto& a : q.ideal.basis_vectors())
      for (const auto& b : q.ideal.basis_vectors()) EXPECT_TRUE(is_zero(l.bracket(a, b)));
  }
}

TEST(QuotientProperty, RegularityAndCartanPush) {
  std::vector<LeibnizAlgebra> algebras;
  for (const auto& name : kLibrary) algebras.push_back(fixtures::algebra(name));
  for (auto& l : random_solvable_set(15)) algebras.push_back(l);
  for (const auto& l : algebras) {
    const RegularityReport r = find_regular_element(l, 5, 24);
    EXPECT_TRUE(check_prop_regularity_push(l, r, 5, 24).holds);
    EXPECT_TRUE(check_thm_cartan_push(l, cartan_from_regular(l, r)).holds);
  }
}

TEST(ConjugacyProperty, VerifyLemma31Conclusion) {
  Random rng(109);
  for (const auto& name : kLeibnizSolvable) {
    const LeibnizAlgebra l = fixtures::algebra(name);
    const std::size_t n = l.dim();
    const Subspace ideal = squares_ideal(l);
    int verified = 0;
    for (int attempt = 0; attempt < 2000 && verified < 100; ++attempt) {
      const Vector b = random_vector(rng, n, 3);
      const FittingPair p = fitting_wrt_element(l, b);
      if (!is_cartan(l, p.null_component).is_cartan) continue;
      const std::size_t k = static_cast<std::size_t>(rng.integer(1, static_cast<long>(n)));
      const Subspace admissible = ideal.preimage_under(l.right_mult(b).pow(k));
      Vector x(n);
      for (const auto& v : admissible.basis_vectors()) x = x + Rational(rng.integer(-4, 4)) * v;
      if (p.null_component.contains(x)) continue;
      const Lemma31Check c = verify_lemma31(l, x, b, k);
      EXPECT_TRUE(c.conclusion) << name;
      EXPECT_TRUE(ideal.contains(c.difference)) << name;
      EXPECT_TRUE(p.null_component.contains(c.x0)) << name;
      ++verified;
    }
    EXPECT_GE(verified, 100) << name;
  }
}

std::vector<Vector> nilpotent_generators(const LeibnizAlgebra& l) {
  std::vector<Vector> out;
  const CartanCertificate c = cartan_from_regular(l, find_regular_element(l, 0, 16));
  for (auto& z : root_generators(l, c.subalgebra, 0)) out.push_back(std::move(z));
  for (std::size_t i = 0; i < l.dim(); ++i) {
    const Vector e = l.basis_element(i).coords();
    if (is_nilpotent(l.right_mult(e))) out.push_back(e);
  }
  return out;
}

TEST(ConjugacyProperty, ExpOfNilpotentGeneratorsIsAutomorphism) {
  std::size_t checked = 0;
  for (const auto& name : kLibrary) {
    const LeibnizAlgebra l = fixtures::algebra(name);
    for (const auto& z : nilpotent_generators(l)) {
      const Automorphism d = exp_automorphism(l, z);
      EXPECT_TRUE(is_automorphism(l, d.matrix)) << name;
      EXPECT_EQ(d.matrix * exp_automorphism(l, Rational(-1) * z).matrix, Matrix::identity(l.dim()));
      EXPECT_EQ(d.matrix * inverse(d).matrix, Matrix::identity(l.dim()));
      ++checked;
    }
  }
  EXPECT_GT(checked, 30u);
}

TEST(ConjugacyProperty, ConjugationIdentity) {
  const LeibnizAlgebra l = fixtures::algebra("example-3.2");
  const auto gens = nilpotent_generators(l);
  std::vector<Automorphism> taus{identity_automorphism(l)};
  for (const auto& z : gens) taus.push_back(exp_automorphism(l, z));
  for (const auto& a : gens)
    for (const auto& b : gens) taus.push_back(compose(exp_automorphism(l, a), exp_automorphism(l, Rational(2) * b)));
  for (const auto& tau : taus) {
    const Matrix tau_inv = inverse(tau).matrix;
    for (const auto& z : gens) {
      const Matrix lhs = tau.matrix * exp_automorphism(l, z).matrix * tau_inv;
      EXPECT_EQ(lhs, exp_automorphism(l, tau.apply(z)).matrix);
    }
  }
}

TEST(ConjugacyProperty, ImagesOfCartanAreCartan) {
  Random rng(110);
  for (const char* name : {"example-3.1", "example-3.2", "sl2-as-leibniz", "sl2-module-2"}) {
    const LeibnizAlgebra l = fixtures::algebra(name);
    const Subspace c = cartan_from_regular(l, find_regular_element(l, 0, 16)).subalgebra;
    const auto gens = nilpotent_generators(l);
    for (int t = 0; t < 10; ++t) {
      Automorphism d = identity_automorphism(l);
      for (int step = 0; step < 3; ++step) {
        const Vector& z = gens[static_cast<std::size_t>(rng.integer(0, static_cast<long>(gens.size()) - 1))];
        d = compose(exp_automorphism(l, Rational(rng.integer(-2, 2)) * z), d);
      }
      const Subspace image = d.apply(c);
      EXPECT_TRUE(is_cartan(l, image).is_cartan) << name;
      EXPECT_EQ(image.dim(), c.dim());
    }
  }
}

TEST(DocumentProperty, ParseSerializeRoundTrip) {
  Random rng(111);
  for (int t = 0; t < 50; ++t) {
    AlgebraDocument doc;
    doc.name = "random-" + std::to_string(t);
    doc.dim = static_cast<std::size_t>(rng.integer(1, 5));
    for (std::size_t i = 0; i < doc.dim; ++i) doc.basis.push_back("u" + std::to_string(i));
    for (std::size_t i = 0; i < doc.dim; ++i)
      for (std::size_t j = 0; j < doc.dim; ++j) {
        if (rng.integer(0, 1) == 0) continue;
        DocumentEntry e{doc.basis[i], doc.basis[j], {}};
        for (std::size_t k = 0; k < doc.dim; ++k) {
          if (rng.integer(0, 2) != 0) continue;
          const Rational c(rng.integer(-99, 99), rng.integer(1, 12));
          e.result.push_back({doc.basis[k], c.to_string()});
        }
        doc.table.push_back(std::move(e));
      }
    const std::string text = serialize(doc);
    EXPECT_EQ(parse_document(text), doc);
    EXPECT_EQ(serialize(parse_document(text)), text);
  }
}

TEST(DocumentProperty, AlgebraRoundTrip) {
  for (const auto& name : kLibrary) {
    const LeibnizAlgebra l = fixtures::algebra(name);
    const LeibnizAlgebra back = to_algebra(to_document(l, name));
    EXPECT_EQ(back.entries(), l.entries()) << name;
    EXPECT_EQ(back.basis_names(), l.basis_names());
  }
}

}  // namespace
}  // namespace leibniz
