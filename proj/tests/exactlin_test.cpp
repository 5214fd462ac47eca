#include <gtest/gtest.h>

#include "test_util.hpp"

namespace leibniz {
namespace {

using testing::random_matrix;
using testing::span_of;
using testing::vec;

// Cofactor expansion; independent of the elimination code under test.
Rational cofactor_determinant(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational det;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    Matrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, k = 0; j < n; ++j)
        if (j != c) minor(i - 1, k++) = m(i, j);
    const Rational term = m(0, c) * cofactor_determinant(minor);
    det = (c % 2 == 0) ? det + term : det - term;
  }
  return det;
}

Matrix jordan_block(std::size_t n, long eigenvalue) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = eigenvalue;
    if (i + 1 < n) m(i, i + 1) = 1;
  }
  return m;
}

TEST(RationalTest, ParsesLiteralGrammar) {
  EXPECT_EQ(Rational::parse("-3/2"), Rational(-3, 2));
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_EQ(Rational::parse("0"), Rational());
  EXPECT_EQ(Rational::parse("+4/6"), Rational(2, 3));
  EXPECT_EQ(Rational::parse("123456789012345678901234567890").to_string(), "123456789012345678901234567890");
}

TEST(RationalTest, RejectsMalformedLiterals) {
  for (const char* bad : {"", "-", "1/", "/2", "1/0", "1/-2", "1.5", " 1", "1 ", "2e3", "--1", "0x10"}) {
    try {
      Rational::parse(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParseError) << bad;
    }
  }
}

TEST(RationalTest, CanonicalForm) {
  const Rational r(6, -4);
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_EQ(Rational(0, 5).to_string(), "0");
  EXPECT_TRUE(Rational(4, 2).is_integer());
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_THROW(Rational(1) / Rational(), std::domain_error);
}

TEST(RrefTest, RankOneReduction) {
  const Matrix m{{2, 4}, {1, 2}};
  EXPECT_EQ(rref(m), (Matrix{{1, 2}, {0, 0}}));
}

TEST(RrefTest, IdentityIsFixed) { EXPECT_EQ(rref(Matrix::identity(3)), Matrix::identity(3)); }

TEST(RrefTest, InvertibleReducesToIdentity) {
  Random rng(11);
  int checked = 0;
  while (checked < 20) {
    const Matrix m = random_matrix(rng, 5, 5);
    if (cofactor_determinant(m).is_zero()) continue;
    EXPECT_EQ(rref(m), Matrix::identity(5));
    EXPECT_EQ(determinant(m), cofactor_determinant(m));
    EXPECT_EQ(m * inverse(m), Matrix::identity(5));
    ++checked;
  }
}

TEST(RrefTest, Idempotent) {
  Random rng(12);
  for (int t = 0; t < 50; ++t) {
    const Matrix m = random_matrix(rng, 1 + t % 6, 1 + (t * 7) % 6, 2);
    const Matrix r = rref(m);
    EXPECT_EQ(rref(r), r);
  }
}

TEST(KernelTest, ZeroMatrixHasFullKernel) { EXPECT_EQ(kernel(Matrix(3, 3)), Subspace::full(3)); }

TEST(KernelTest, IdentityHasZeroKernel) { EXPECT_EQ(kernel(Matrix::identity(3)), Subspace::zero(3)); }

TEST(KernelTest, RightMultiplicationByZ) {
  // Columns are the images of x, y, z: x -> x, y -> -y, z -> x.
  const Matrix rz{{1, 0, 1}, {0, -1, 0}, {0, 0, 0}};
  const Subspace k = kernel(rz);
  EXPECT_EQ(k.dim(), 1u);
  EXPECT_EQ(k, span_of(3, {{1, 0, -1}}));
}

TEST(KernelTest, RankNullity) {
  Random rng(13);
  for (int t = 0; t < 50; ++t) {
    const Matrix m = random_matrix(rng, 4, 6, 1);
    EXPECT_EQ(kernel(m).dim() + rank(m), 6u);
    for (const auto& v : kernel(m).basis_vectors()) EXPECT_TRUE(is_zero(m.apply(v)));
  }
}

TEST(FittingPairTest, NilpotentJordanBlock) {
  const FittingPair p = fitting_pair(jordan_block(3, 0));
  EXPECT_EQ(p.null_component, Subspace::full(3));
  EXPECT_EQ(p.one_component, Subspace::zero(3));
}

TEST(FittingPairTest, Identity) {
  const FittingPair p = fitting_pair(Matrix::identity(3));
  EXPECT_EQ(p.null_component, Subspace::zero(3));
  EXPECT_EQ(p.one_component, Subspace::full(3));
}

TEST(FittingPairTest, RightMultiplicationByZ) {
  const Matrix rz{{1, 0, 1}, {0, -1, 0}, {0, 0, 0}};
  const FittingPair p = fitting_pair(rz);
  EXPECT_EQ(p.null_component, span_of(3, {{1, 0, -1}}));
  EXPECT_EQ(p.one_component, span_of(3, {{1, 0, 0}, {0, 1, 0}}));
}

TEST(ZeroRootOrderTest, Examples) {
  EXPECT_EQ(zero_root_order(Matrix::identity(4)), 0u);
  EXPECT_EQ(zero_root_order(Matrix(4, 4)), 4u);
  const Matrix re3 = Matrix::diagonal(vec({-2, 2, 0, -1, 1}));
  EXPECT_EQ(zero_root_order(re3), 1u);
}

TEST(SubspaceTest, SumOfCoordinateLines) {
  EXPECT_EQ(span_of(3, {{1, 0, 0}}).sum(span_of(3, {{0, 1, 0}})), span_of(3, {{1, 0, 0}, {0, 1, 0}}));
}

TEST(SubspaceTest, IntersectWithFull) {
  const Subspace s = span_of(4, {{1, 2, 0, -1}, {0, 1, 1, 1}});
  EXPECT_EQ(Subspace::full(4).intersect(s), s);
}

TEST(SubspaceTest, PlanesInThreeSpaceMeetInALine) {
  const Subspace a = span_of(3, {{1, 0, -1}, {0, 1, 0}});
  const Subspace b = span_of(3, {{1, 0, 0}, {0, 0, 1}});
  EXPECT_EQ(a.intersect(b), span_of(3, {{1, 0, -1}}));
}

TEST(SubspaceTest, ComplementaryLinesMeetInZero) {
  EXPECT_EQ(span_of(2, {{1, 1}}).intersect(span_of(2, {{1, -1}})), Subspace::zero(2));
}

TEST(SubspaceTest, CanonicalBasisIsReduced) {
  const Subspace s = span_of(3, {{2, 4, 6}, {1, 2, 4}, {3, 6, 10}});
  EXPECT_EQ(s.dim(), 2u);
  EXPECT_EQ(s.basis(), (Matrix{{1, 2, 0}, {0, 0, 1}}));
  EXPECT_EQ(s.pivots(), (std::vector<std::size_t>{0, 2}));
  EXPECT_TRUE(s.contains(vec({1, 2, 1})));
  EXPECT_FALSE(s.contains(vec({0, 1, 0})));
}

TEST(SubspaceTest, DimensionMismatchThrows) {
  try {
    (void)Subspace::full(2).sum(Subspace::full(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
}

TEST(SubspaceTest, GrassmannFormula) {
  Random rng(14);
  for (int t = 0; t < 40; ++t) {
    const Subspace a = Subspace::row_span(random_matrix(rng, 3, 5, 1));
    const Subspace b = Subspace::row_span(random_matrix(rng, 3, 5, 1));
    EXPECT_EQ(a.sum(b).dim() + a.intersect(b).dim(), a.dim() + b.dim());
    EXPECT_TRUE(a.sum(b).contains(a));
    EXPECT_TRUE(a.contains(a.intersect(b)));
  }
}

TEST(MatrixTest, ExpOfNilpotent) {
  const Matrix n = jordan_block(3, 0);
  const Matrix e = exp_nilpotent(n);
  EXPECT_EQ(e, (Matrix{{1, 1, Rational(1, 2)}, {0, 1, 1}, {0, 0, 1}}));
  EXPECT_EQ(e * exp_nilpotent(Rational(-1) * n), Matrix::identity(3));
  try {
    (void)exp_nilpotent(Matrix::identity(2));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kNotNilpotent);
  }
}

TEST(PolynomialTest, CharacteristicPolynomialMatchesCofactorOracle) {
  Random rng(15);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 1 + t % 5;
    const Matrix a = random_matrix(rng, n, n);
    const Polynomial p = characteristic_polynomial(a);
    ASSERT_EQ(p.degree(), static_cast<int>(n));
    EXPECT_EQ(p.leading(), Rational(1));
    for (long s = -3; s <= 3; ++s) {
      const Matrix shifted = Matrix::identity(n) * Rational(s) - a;
      EXPECT_EQ(p(s), cofactor_determinant(shifted));
    }
  }
}

TEST(PolynomialTest, RationalRootsOfProducts) {
  const Polynomial p = Polynomial::linear_factor(Rational(3, 2)) * Polynomial::linear_factor(-2) *
                       Polynomial::linear_factor(-2) * Polynomial({2, 0, 1});  // (t - 3/2)(t + 2)^2(t^2 + 2)
  EXPECT_EQ(rational_roots(p), (std::vector<Rational>{-2, Rational(3, 2)}));
  const auto parts = squarefree_decomposition(p);
  ASSERT_GE(parts.size(), 2u);
  EXPECT_EQ(parts[1], Polynomial::linear_factor(-2));
}

TEST(PolynomialTest, DivisionAndGcd) {
  const Polynomial a = Polynomial::linear_factor(1) * Polynomial::linear_factor(2);
  const Polynomial b = Polynomial::linear_factor(2) * Polynomial::linear_factor(5);
  EXPECT_EQ(gcd(a, b), Polynomial::linear_factor(2));
  const auto [q, r] = divmod(a, Polynomial::linear_factor(1));
  EXPECT_EQ(q, Polynomial::linear_factor(2));
  EXPECT_TRUE(r.is_zero());
}

}  // namespace
}  // namespace leibniz
