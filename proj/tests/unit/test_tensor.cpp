#include <algorithm>
#include <numeric>

#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace entwine;
using namespace testing_support;

namespace {

ShapedMap sq(const Matrix& m) { return ShapedMap(m, TensorShape{m.cols()}, TensorShape{m.rows()}); }

Matrix basis_vector(const FieldSpec& f, std::size_t n, std::size_t i) {
  Matrix v(f, n, 1);
  v(i, 0) = Scalar::one(f);
  return v;
}

std::vector<std::size_t> compose_perm(const std::vector<std::size_t>& p2, const std::vector<std::size_t>& p1) {
  std::vector<std::size_t> out(p1.size());
  for (std::size_t k = 0; k < p1.size(); ++k) out[k] = p2[p1[k]];
  return out;
}

}  // namespace

TEST(Kron, IdentityTimesIdentity) {
  EXPECT_EQ(kron(identity_map(Q(), 2), identity_map(Q(), 3)).matrix, Matrix::identity(Q(), 6));
}

TEST(Kron, Scalars) { EXPECT_EQ(kron(sq(M(Q(), 1, 1, {2})), sq(M(Q(), 1, 1, {3}))).matrix, M(Q(), 1, 1, {6})); }

TEST(Kron, SwapTimesIdentityOnBasis) {
  const ShapedMap s = sq(M(Q(), 2, 2, {0, 1, 1, 0}));
  const ShapedMap k = kron(s, identity_map(Q(), 1));
  EXPECT_EQ(k.matrix * col(Q(), {1, 0}), col(Q(), {0, 1}));
  EXPECT_EQ(k.domain, (TensorShape{2, 1}));
}

TEST(Kron, FieldMismatch) { EXPECT_THROW(kron(identity_map(Q(), 1), identity_map(F(2), 1)), FieldMismatch); }

TEST(Kron, Associative) {
  std::mt19937 rng(5);
  for (int t = 0; t < 10; ++t) {
    const auto f = random_map(rng, Q(), {2}, {3});
    const auto g = random_map(rng, Q(), {1}, {2});
    const auto h = random_map(rng, Q(), {2}, {2});
    EXPECT_EQ(kron(kron(f, g), h).matrix, kron(f, kron(g, h)).matrix);
  }
}

TEST(Kron, MixedProduct) {
  std::mt19937 rng(6);
  const auto f1 = random_map(rng, F(3), {2}, {3});
  const auto f2 = random_map(rng, F(3), {3}, {2});
  const auto g1 = random_map(rng, F(3), {2}, {2});
  const auto g2 = random_map(rng, F(3), {2}, {4});
  EXPECT_EQ(compose(kron(f2, g2), kron(f1, g1)).matrix, kron(compose(f2, f1), compose(g2, g1)).matrix);
}

TEST(Permute, IdentityPermutation) {
  EXPECT_EQ(permute_factors(Q(), {2, 3, 2}, {0, 1, 2}).matrix, Matrix::identity(Q(), 12));
}

TEST(Permute, SwapIndexFormula) {
  const ShapedMap s = permute_factors(Q(), {2, 3}, {1, 0});
  EXPECT_EQ(s.codomain, (TensorShape{3, 2}));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      EXPECT_EQ(s.matrix * basis_vector(Q(), 6, i * 3 + j), basis_vector(Q(), 6, j * 2 + i));
  EXPECT_EQ(s.matrix, swap_map(Q(), 2, 3).matrix);
}

TEST(Permute, SwapIsInvolution) {
  EXPECT_EQ(compose(swap_map(Q(), 3, 2), swap_map(Q(), 2, 3)).matrix, Matrix::identity(Q(), 6));
}

TEST(Permute, InvalidPermutation) {
  EXPECT_THROW(permute_factors(Q(), {2, 3}, {0, 0}), InvalidPermutation);
  EXPECT_THROW(permute_factors(Q(), {2, 3}, {0, 1, 2}), InvalidPermutation);
  EXPECT_THROW(permute_factors(Q(), {2, 3}, {1, 2}), InvalidPermutation);
}

TEST(Permute, CompositionLaw) {
  const TensorShape shape{2, 3, 1, 2};
  std::vector<std::size_t> p1(4), p2(4);
  std::iota(p1.begin(), p1.end(), 0);
  std::mt19937 rng(17);
  for (int t = 0; t < 24; ++t) {
    std::shuffle(p1.begin(), p1.end(), rng);
    p2 = p1;
    std::shuffle(p2.begin(), p2.end(), rng);
    const auto first = permute_factors(Q(), shape, p1);
    const auto second = permute_factors(Q(), permuted_shape(shape, p1), p2);
    const auto both = permute_factors(Q(), shape, compose_perm(p2, p1));
    EXPECT_EQ(compose(second, first).matrix, both.matrix);
    EXPECT_EQ(second.codomain, both.codomain);
  }
}

TEST(ApplyOnFactors, IdentityGivesIdentity) {
  EXPECT_EQ(apply_on_factors(identity_map(Q(), 3), {2, 3, 4}, 1).matrix, Matrix::identity(Q(), 24));
}

TEST(ApplyOnFactors, SwapOnMiddleFactor) {
  const ShapedMap s = sq(M(Q(), 2, 2, {0, 1, 1, 0}));
  const ShapedMap a = apply_on_factors(s, {3, 2, 5}, 1);
  EXPECT_EQ(a.matrix, kron_all({identity_map(Q(), 3), s, identity_map(Q(), 5)}).matrix);
  // (1, 0, 4) -> (1, 1, 4)
  EXPECT_EQ(a.matrix * basis_vector(Q(), 30, (1 * 2 + 0) * 5 + 4), basis_vector(Q(), 30, (1 * 2 + 1) * 5 + 4));
}

TEST(ApplyOnFactors, DisjointRangesCommute) {
  std::mt19937 rng(8);
  const auto f = random_map(rng, Q(), {2}, {2});
  const auto g = random_map(rng, Q(), {3}, {3});
  const TensorShape shape{2, 4, 3};
  const auto a = apply_on_factors(f, shape, 0);
  const auto b = apply_on_factors(g, shape, 2);
  EXPECT_EQ(compose(a, b).matrix, compose(b, a).matrix);
}

TEST(ApplyOnFactors, RespectsComposition) {
  std::mt19937 rng(9);
  const auto f = random_map(rng, F(5), {2, 3}, {2, 3});
  const auto g = random_map(rng, F(5), {2, 3}, {2, 3});
  const TensorShape shape{4, 2, 3};
  EXPECT_EQ(compose(apply_on_factors(g, shape, 1), apply_on_factors(f, shape, 1)).matrix,
            apply_on_factors(compose(g, f), shape, 1).matrix);
}

TEST(ApplyOnFactors, ShapeMismatch) {
  EXPECT_THROW(apply_on_factors(identity_map(Q(), 2), {3, 3}, 0), ShapeMismatch);
  EXPECT_THROW(apply_on_factors(identity_map(Q(), 3), {3, 3}, 2), ShapeMismatch);
}

TEST(Dual, Examples) {
  EXPECT_EQ(dual_map(identity_map(Q(), 3)).matrix, Matrix::identity(Q(), 3));
  const ShapedMap f = sq(M(Q(), 2, 2, {1, 2, 0, 1}));
  EXPECT_EQ(dual_map(f).matrix, M(Q(), 2, 2, {1, 0, 2, 1}));
  EXPECT_EQ(dual_map(dual_map(f)).matrix, f.matrix);
}

TEST(Dual, ReversesComposition) {
  std::mt19937 rng(10);
  for (int t = 0; t < 10; ++t) {
    const auto g = random_map(rng, Q(), {3}, {2});
    const auto f = random_map(rng, Q(), {2, 2}, {3});
    EXPECT_EQ(dual_map(compose(g, f)).matrix, compose(dual_map(f), dual_map(g)).matrix);
  }
}

TEST(Dual, ExchangesShapes) {
  const auto d = dual_map(zero_map(Q(), {2, 3}, {4}));
  EXPECT_EQ(d.domain, (TensorShape{4}));
  EXPECT_EQ(d.codomain, (TensorShape{2, 3}));
}

TEST(HomTensor, GroundFieldDomain) {
  EXPECT_EQ(hom_as_tensor(1, 4), (TensorShape{1, 4}));
  const Matrix map = M(Q(), 4, 1, {1, 2, 3, 4});
  EXPECT_EQ(hom_to_tensor(map), map);
}

TEST(HomTensor, IndexConvention) {
  // u_1 -> w_2 in Hom(K^2, K^3) sits at 1 * 3 + 2.
  Matrix map(Q(), 3, 2);
  map(2, 1) = Scalar::one(Q());
  EXPECT_EQ(hom_to_tensor(map), basis_vector(Q(), 6, 5));
  EXPECT_EQ(tensor_to_hom(hom_to_tensor(map), 2, 3), map);
}

TEST(HomTensor, TracePairing) {
  const ShapedMap ev = evaluation_pairing(Q(), 2);
  EXPECT_EQ(ev.matrix * hom_to_tensor(Matrix::identity(Q(), 2)), M(Q(), 1, 1, {2}));
}

TEST(HomTensor, CurryRoundTrip) {
  const ShapedMap c = curry_to_tensor(Q(), 2, 3, 2);
  const ShapedMap back = permute_factors(Q(), {3, 2, 2}, {1, 0, 2});
  EXPECT_EQ(compose(back, c).matrix, Matrix::identity(Q(), 12));
}

TEST(HomTensor, CurryMeaning) {
  // h(u)(v) = h~(v (x) u) for a random nested map.
  std::mt19937 rng(11);
  const std::size_t u = 2, v = 3, w = 2;
  const Matrix nested = random_matrix(rng, Q(), u * v * w, 1);
  const Matrix flat = curry_to_tensor(Q(), u, v, w).matrix * nested;
  for (std::size_t i = 0; i < u; ++i)
    for (std::size_t j = 0; j < v; ++j)
      for (std::size_t k = 0; k < w; ++k) EXPECT_EQ(nested(((i * v) + j) * w + k, 0), flat(((j * u) + i) * w + k, 0));
}

TEST(ZeroDimensional, Degenerates) {
  const auto z = identity_map(Q(), TensorShape{0, 3});
  EXPECT_EQ(z.matrix.rows(), 0u);
  EXPECT_EQ(kron(z, identity_map(Q(), 2)).matrix.cols(), 0u);
  EXPECT_EQ(swap_map(Q(), 0, 2).matrix.rows(), 0u);
}
