#include <gtest/gtest.h>

#include "test_util.hpp"

namespace leibniz {
namespace {

using testing::random_vector;
using testing::small_solvable;
using testing::sl2_extension;
using testing::span_of;
using testing::vec;

RegularityReport report_for(const LeibnizAlgebra& l, const Vector& a) {
  RegularityReport r{l.element(a)};
  r.nullity = fitting_wrt_element(l, a).null_component.dim();
  r.is_regular = true;
  return r;
}

TEST(SquaresIdealTest, LieAlgebraHasNone) {
  EXPECT_EQ(squares_ideal(fixtures::sl2()), Subspace::zero(3));
  EXPECT_EQ(squares_ideal(fixtures::heisenberg(5)), Subspace::zero(5));
}

TEST(SquaresIdealTest, Examples) {
  EXPECT_EQ(squares_ideal(sl2_extension()), span_of(5, {{0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}}));
  EXPECT_EQ(squares_ideal(small_solvable()), span_of(3, {{1, 0, 0}}));
}

TEST(SquaresIdealTest, IsTwoSidedAndAbelian) {
  for (const char* name : {"example-3.1", "example-3.2", "sl2-module-3", "filiform-leibniz-5", "solvable-7-3"}) {
    const LeibnizAlgebra l = fixtures::algebra(name);
    const Subspace i = squares_ideal(l);
    EXPECT_TRUE(is_ideal(l, i)) << name;
    for (const auto& a : i.basis_vectors())
      for (const auto& b : i.basis_vectors()) EXPECT_TRUE(is_zero(l.bracket(a, b))) << name;
  }
}

TEST(QuotientTest, LieInputIsUnchanged) {
  const LeibnizAlgebra l = fixtures::sl2();
  const QuotientMap q = build_quotient(l);
  EXPECT_EQ(q.ideal.dim(), 0u);
  EXPECT_EQ(q.quotient.dim(), 3u);
  EXPECT_EQ(q.projection, Matrix::identity(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(q.quotient.product(i, j), l.product(i, j));
}

TEST(QuotientTest, Sl2Extension) {
  const QuotientMap q = build_quotient(sl2_extension());
  const LeibnizAlgebra& g = q.quotient;
  ASSERT_EQ(g.dim(), 3u);
  EXPECT_EQ(g.basis_names(), (std::vector<std::string>{"e1", "e2", "e3"}));
  EXPECT_EQ(g.product(1, 0), vec({0, 0, -1}));
  EXPECT_EQ(g.product(2, 0), vec({2, 0, 0}));
  EXPECT_EQ(g.product(2, 1), vec({0, -2, 0}));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(g.product(i, j), Rational(-1) * g.product(j, i));
  EXPECT_TRUE(is_lie(g));
}

TEST(QuotientTest, SmallSolvable) {
  const QuotientMap q = build_quotient(small_solvable());
  const LeibnizAlgebra& g = q.quotient;
  ASSERT_EQ(g.dim(), 2u);
  EXPECT_EQ(g.basis_names(), (std::vector<std::string>{"y", "z"}));
  EXPECT_EQ(g.product(1, 0), vec({1, 0}));
  EXPECT_EQ(g.product(0, 1), vec({-1, 0}));
  EXPECT_EQ(g.product(1, 1), vec({0, 0}));
  EXPECT_EQ(g.product(0, 0), vec({0, 0}));
}

TEST(PushTest, Elements) {
  const QuotientMap q = build_quotient(sl2_extension());
  EXPECT_TRUE(push_element(q, vec({0, 0, 0, 3, -1})).is_zero());
  EXPECT_EQ(push_element(q, vec({1, 0, 0, 0, 0})).coords(), vec({1, 0, 0}));
  EXPECT_EQ(push_element(q, vec({1, 0, 0, 1, 0})).coords(), vec({1, 0, 0}));
}

TEST(PushTest, Subspaces) {
  const QuotientMap q = build_quotient(sl2_extension());
  EXPECT_EQ(push_subspace(q, q.ideal), Subspace::zero(3));
  EXPECT_EQ(push_subspace(q, span_of(5, {{1, 0, 0, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}})), span_of(3, {{1, 0, 0}}));
  EXPECT_EQ(push_subspace(q, Subspace::full(5)), Subspace::full(3));
}

TEST(PushTest, ProjectionIsHomomorphism) {
  Random rng(51);
  for (const char* name : {"example-3.1", "example-3.2", "sl2-module-2", "solvable-6-1"}) {
    const LeibnizAlgebra l = fixtures::algebra(name);
    const QuotientMap q = build_quotient(l);
    for (int t = 0; t < 30; ++t) {
      const Vector x = random_vector(rng, l.dim());
      const Vector y = random_vector(rng, l.dim());
      EXPECT_EQ(push_element(q, l.bracket(x, y)), bracket(push_element(q, x), push_element(q, y))) << name;
    }
    EXPECT_EQ(q.projection * q.section, Matrix::identity(q.quotient.dim()));
  }
}

TEST(RegularityPushTest, LieInputIsTrivial) {
  const LeibnizAlgebra l = fixtures::sl2();
  const RegularityPush p = check_prop_regularity_push(l, find_regular_element(l, 0, 16), 0, 16);
  EXPECT_TRUE(p.holds);
  EXPECT_EQ(p.pushed_nullity, 1u);
}

TEST(RegularityPushTest, Sl2ExtensionE3) {
  const LeibnizAlgebra l = sl2_extension();
  const RegularityPush p = check_prop_regularity_push(l, report_for(l, vec({0, 0, 1, 0, 0})), 0, 16);
  EXPECT_TRUE(p.holds);
  EXPECT_EQ(p.pushed_nullity, 1u);
  EXPECT_EQ(p.quotient_rank, 1u);
}

TEST(RegularityPushTest, SmallSolvableXMinusZ) {
  const LeibnizAlgebra l = small_solvable();
  const RegularityPush p = check_prop_regularity_push(l, report_for(l, vec({1, 0, -1})), 0, 16);
  EXPECT_TRUE(p.holds);
  EXPECT_EQ(p.pushed_nullity, 1u);
}

TEST(CartanPushTest, LieInputIsTrivial) {
  const LeibnizAlgebra l = fixtures::sl2();
  const CartanPush p = check_thm_cartan_push(l, is_cartan(l, span_of(3, {{0, 0, 1}})));
  EXPECT_TRUE(p.holds);
}

TEST(CartanPushTest, SmallSolvable) {
  const LeibnizAlgebra l = small_solvable();
  const CartanPush p = check_thm_cartan_push(l, is_cartan(l, span_of(3, {{1, 0, -1}})));
  EXPECT_TRUE(p.holds);
  EXPECT_EQ(p.image, span_of(2, {{0, 1}}));
}

TEST(CartanPushTest, Sl2Extension) {
  const LeibnizAlgebra l = sl2_extension();
  const CartanPush p = check_thm_cartan_push(l, is_cartan(l, span_of(5, {{0, 0, 1, 0, 0}})));
  EXPECT_TRUE(p.holds);
  EXPECT_EQ(p.image, span_of(3, {{0, 0, 1}}));
}

// The image of e1 in the sl2 quotient is ad-nilpotent, so it has the full
// quotient as Fitting null component and span{e1 + I} is not Cartan there.
TEST(NonPreservationTest, NilpotentPreimageAndImage) {
  const LeibnizAlgebra l = sl2_extension();
  const QuotientMap q = build_quotient(l);
  const Vector e1 = vec({1, 0, 0, 0, 0});
  EXPECT_EQ(fitting_wrt_element(l, e1).null_component.dim(), 5u);
  EXPECT_EQ(find_regular_element(l, 0, 32).nullity, 1u);

  const Element e1_bar = push_element(q, e1);
  EXPECT_EQ(fitting_wrt_element(e1_bar).null_component.dim(), 3u);
  EXPECT_EQ(find_regular_element(q.quotient, 0, 32).nullity, 1u);

  const Subspace s = span_of(5, {{1, 0, 0, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}});
  EXPECT_FALSE(is_cartan(l, s).is_cartan);
  const CartanCertificate image = is_cartan(q.quotient, push_subspace(q, s));
  EXPECT_FALSE(image.is_cartan);
  EXPECT_EQ(image.left_normalizer, span_of(3, {{1, 0, 0}, {0, 0, 1}}));
}

}  // namespace
}  // namespace leibniz
