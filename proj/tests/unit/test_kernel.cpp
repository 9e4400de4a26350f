#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace entwine;
using namespace testing_support;

TEST(Field, PrimeFieldRejectsComposite) {
  EXPECT_THROW(FieldSpec::prime(4), ParseError);
  EXPECT_THROW(FieldSpec::prime(1), ParseError);
  EXPECT_NO_THROW(FieldSpec::prime(2));
  EXPECT_NO_THROW(FieldSpec::prime(4294967291ULL));
}

TEST(Field, ParseAndPrint) {
  EXPECT_EQ(FieldSpec::parse("Q"), Q());
  EXPECT_EQ(FieldSpec::parse("F7"), F(7));
  EXPECT_EQ(F(7).to_string(), "F7");
  EXPECT_THROW(FieldSpec::parse("F9"), ParseError);
  EXPECT_THROW(FieldSpec::parse("R"), ParseError);
}

TEST(Scalar, RationalCanonicalForm) {
  EXPECT_EQ(frac(2, 4).to_string(), "1/2");
  EXPECT_EQ(frac(3, -6).to_string(), "-1/2");
  EXPECT_EQ(frac(4, 2).to_string(), "2");
  EXPECT_EQ(frac(1, 2) * frac(2, 3), frac(1, 3));
  EXPECT_THROW(frac(1, 0), DivisionByZero);
}

TEST(Scalar, ParseStrict) {
  EXPECT_EQ(Scalar::parse(Q(), "-3/4"), frac(-3, 4));
  EXPECT_EQ(Scalar::parse(Q(), "5/1"), Scalar::from_int(Q(), 5));
  EXPECT_THROW(Scalar::parse(Q(), "2/4"), ParseError);
  EXPECT_THROW(Scalar::parse(Q(), "1/-2"), ParseError);
  EXPECT_THROW(Scalar::parse(Q(), "1.5"), ParseError);
  EXPECT_THROW(Scalar::parse(Q(), ""), ParseError);
  EXPECT_EQ(Scalar::parse(F(5), "4").residue(), 4u);
  EXPECT_THROW(Scalar::parse(F(5), "5"), ParseError);
  EXPECT_THROW(Scalar::parse(F(5), "-1"), ParseError);
}

TEST(Scalar, PrimeFieldArithmetic) {
  const auto f = F(7);
  const Scalar three = Scalar::from_int(f, 3);
  EXPECT_EQ((three * three.inverse()), Scalar::one(f));
  EXPECT_EQ(Scalar::from_int(f, -1).residue(), 6u);
  EXPECT_EQ(Scalar::from_fraction(f, 1, 2).residue(), 4u);
  EXPECT_THROW(Scalar::zero(f).inverse(), DivisionByZero);
  EXPECT_THROW(Scalar::from_fraction(f, 1, 7), DivisionByZero);
}

TEST(Scalar, MixedFieldsRejected) {
  EXPECT_THROW(Scalar::one(Q()) + Scalar::one(F(2)), FieldMismatch);
  EXPECT_THROW(Scalar::one(F(3)) * Scalar::one(F(2)), FieldMismatch);
}

TEST(MatMul, IdentityIsNeutral) {
  const Matrix m = M(Q(), 2, 2, {1, -2, 3, 5});
  EXPECT_EQ(Matrix::identity(Q(), 2) * m, m);
  EXPECT_EQ(m * Matrix::identity(Q(), 2), m);
}

TEST(MatMul, OneByOneRational) {
  Matrix a(Q(), 1, 1), b(Q(), 1, 1);
  a(0, 0) = frac(1, 2);
  b(0, 0) = frac(2, 3);
  EXPECT_EQ((a * b)(0, 0), frac(1, 3));
}

TEST(MatMul, SquareOverF2) {
  const Matrix m = M(F(2), 2, 2, {1, 1, 0, 1});
  EXPECT_EQ(m * m, Matrix::identity(F(2), 2));
}

TEST(MatMul, Errors) {
  EXPECT_THROW(M(Q(), 2, 3, {1, 2, 3, 4, 5, 6}) * M(Q(), 2, 2, {1, 0, 0, 1}), DimensionMismatch);
  EXPECT_THROW(Matrix::identity(Q(), 2) * Matrix::identity(F(2), 2), FieldMismatch);
}

TEST(Nullspace, Examples) {
  EXPECT_EQ(nullspace(Matrix(Q(), 2, 2)).size(), 2u);
  EXPECT_TRUE(nullspace(Matrix::identity(Q(), 3)).empty());
  const auto n = nullspace(M(Q(), 1, 2, {1, 2}));
  ASSERT_EQ(n.size(), 1u);
  EXPECT_EQ(n[0], col(Q(), {-2, 1}));
}

TEST(Nullspace, DependsOnlyOnRowSpace) {
  const Matrix a = M(Q(), 2, 3, {1, 2, 3, 0, 1, 1});
  const Matrix b = M(Q(), 2, 3, {1, 3, 4, 2, 5, 7});  // same row space
  EXPECT_EQ(nullspace(a), nullspace(b));
}

TEST(SolveAffine, Examples) {
  const auto s1 = solve_affine(Matrix::identity(Q(), 2), col(Q(), {1, 0}));
  ASSERT_TRUE(s1.feasible);
  EXPECT_EQ(*s1.particular, col(Q(), {1, 0}));
  EXPECT_TRUE(s1.kernel.empty());

  const auto s2 = solve_affine(M(Q(), 1, 1, {0}), col(Q(), {1}));
  EXPECT_FALSE(s2.feasible);
  EXPECT_EQ(s2.rank, 0u);
  EXPECT_EQ(s2.augmented_rank, 1u);

  const auto s3 = solve_affine(M(F(2), 1, 2, {1, 1}), col(F(2), {1}));
  ASSERT_TRUE(s3.feasible);
  EXPECT_EQ(*s3.particular, col(F(2), {1, 0}));
  ASSERT_EQ(s3.kernel.size(), 1u);
  EXPECT_EQ(s3.kernel[0], col(F(2), {1, 1}));
}

TEST(SolveAffine, DimensionMismatch) {
  EXPECT_THROW(solve_affine(Matrix::identity(Q(), 2), col(Q(), {1, 0, 0})), DimensionMismatch);
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(Matrix(Q(), 3, 2)), 0u);
  EXPECT_EQ(rank(Matrix::identity(Q(), 4)), 4u);
  EXPECT_EQ(rank(M(Q(), 2, 2, {1, 2, 2, 4})), 1u);
}

TEST(Inverse, RoundTrip) {
  const Matrix m = M(Q(), 2, 2, {2, 1, 1, 1});
  EXPECT_EQ(m * inverse(m), Matrix::identity(Q(), 2));
  EXPECT_THROW(inverse(M(Q(), 2, 2, {1, 2, 2, 4})), DivisionByZero);
}

class KernelProperties : public ::testing::TestWithParam<int> {};

// Random systems over Q, F2, F3 and a large prime.
TEST_P(KernelProperties, RankNullityAndSolutions) {
  const std::vector<FieldSpec> fields = {Q(), F(2), F(3), F(1000003)};
  std::mt19937 rng(1234 + GetParam());
  for (const auto& f : fields) {
    for (int trial = 0; trial < 25; ++trial) {
      std::uniform_int_distribution<std::size_t> dim(1, 6);
      const std::size_t r = dim(rng), c = dim(rng);
      const Matrix m = random_matrix(rng, f, r, c);
      const auto ns = nullspace(m);
      EXPECT_EQ(rank(m) + ns.size(), c);
      for (const auto& v : ns) EXPECT_TRUE((m * v).is_zero());
      if (!ns.empty()) {
        EXPECT_EQ(rank(hconcat_all(f, c, ns)), ns.size());
      }
      EXPECT_EQ(rank(m), rank(m.transposed()));

      const Matrix b = random_matrix(rng, f, r, 1);
      const auto s = solve_affine(m, b);
      EXPECT_EQ(s.feasible, rank(hconcat(m, b)) == rank(m));
      EXPECT_EQ(s.augmented_rank, rank(hconcat(m, b)));
      if (s.feasible) {
        EXPECT_EQ(m * *s.particular, b);
        EXPECT_EQ(s.kernel, ns);
      } else {
        EXPECT_EQ(s.augmented_rank, s.rank + 1);
      }

      // A right-hand side in the column space is always feasible.
      const Matrix x = random_matrix(rng, f, c, 1);
      const auto s2 = solve_affine(m, m * x);
      ASSERT_TRUE(s2.feasible);
      EXPECT_EQ(m * *s2.particular, m * x);
    }
  }
}

TEST_P(KernelProperties, RationalsStayReduced) {
  std::mt19937 rng(99 + GetParam());
  const Matrix m = random_matrix(rng, Q(), 5, 5, 9, 0.1);
  for (const auto& v : nullspace(m))
    for (const auto& e : v.entries()) {
      mpq_class copy = e.rational();
      copy.canonicalize();
      EXPECT_EQ(copy, e.rational());
      EXPECT_GT(e.rational().get_den(), 0);
    }
  if (rank(m) == 5) {
    const Matrix inv = inverse(m);
    EXPECT_EQ(m * inv, Matrix::identity(Q(), 5));
    EXPECT_EQ(inv * m, Matrix::identity(Q(), 5));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, KernelProperties, ::testing::Range(0, 6));

TEST(CanonicalSpan, BasisIndependent) {
  const Matrix u = col(Q(), {1, 1, 0});
  const Matrix v = col(Q(), {0, 1, 1});
  const auto a = canonical_span_basis(Q(), 3, {u, v});
  const auto b = canonical_span_basis(Q(), 3, {u + v, u - v});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.size(), 2u);
}
