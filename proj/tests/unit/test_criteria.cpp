#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace entwine;
using namespace testing_support;

namespace {

// Path coalgebra of X -> Y with A = K and the flip entwining.
StructureBundle path_with_ground_algebra() {
  const auto p = catalog_build("path-a2");
  AlgebraData a = AlgebraData::ground(Q());
  auto e = flip_entwining(p.coalgebra, a);
  return make_bundle(p.coalgebra, a, e);
}

bool in_span(const std::vector<Matrix>& vectors, const Matrix& v) {
  if (vectors.empty()) return v.is_zero();
  const Matrix span = hconcat_all(v.field(), v.rows(), vectors);
  return rank(hconcat(span, v)) == rank(span);
}

std::vector<Matrix> lambda_columns(const std::vector<LambdaElement>& basis) {
  std::vector<Matrix> out;
  for (const auto& l : basis) out.push_back(l.lambda[0].matrix);
  return out;
}

// One-object bundles with C(X, X) = K and dim A = 2.
LambdaElement lambda_of(const Matrix& m) {
  LambdaElement l;
  const std::size_t d = 2;
  l.lambda.push_back(ShapedMap(m, TensorShape{1}, TensorShape{d, d}));
  return l;
}

SigmaElement sigma_of(const Matrix& m) {
  SigmaElement s;
  s.sigma.push_back(ShapedMap(m, TensorShape{1, m.cols()}, TensorShape{1}));
  return s;
}

}  // namespace

TEST(V1, Dimensions) {
  EXPECT_EQ(v1_basis(catalog_build("trivial")).size(), 1u);
  EXPECT_EQ(v1_basis(catalog_build("matrix-coalg-2obj")).size(), 1u);
  EXPECT_EQ(v1_basis(path_with_ground_algebra()).size(), 1u);
}

TEST(V1, MatrixCoalgebraForcesEqualComponents) {
  const auto basis = v1_basis(catalog_build("matrix-coalg-2obj"));
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(basis[0].sigma[0].matrix, basis[0].sigma[1].matrix);
}

TEST(W1, GroupAlgebraContainsCasimir) {
  const auto basis = w1_basis(catalog_build("group-c2-q"));
  EXPECT_TRUE(in_span(lambda_columns(basis), col(Q(), {1, 0, 0, 1})));
  EXPECT_FALSE(in_span(lambda_columns(basis), col(Q(), {1, 0, 0, 0})));
}

TEST(W1, DualNumbers) {
  const auto basis = w1_basis(catalog_build("dual-numbers-q"));
  ASSERT_EQ(basis.size(), 2u);
  // span of 1 (x) x + x (x) 1 and x (x) x, basis {1, x}
  const std::vector<Matrix> expected = {col(Q(), {0, 1, 1, 0}), col(Q(), {0, 0, 0, 1})};
  for (const auto& v : lambda_columns(basis)) EXPECT_TRUE(in_span(expected, v));
  for (const auto& v : expected) EXPECT_TRUE(in_span(lambda_columns(basis), v));
}

TEST(W1, GroundAlgebra) { EXPECT_EQ(w1_basis(catalog_build("trivial")).size(), 1u); }

TEST(W1, BasisElementsVerify) {
  for (const auto& name : catalog_names()) {
    const auto b = catalog_build(name);
    for (const auto& s : v1_basis(b)) EXPECT_TRUE(check_v1(b, s).ok()) << name;
    for (const auto& l : w1_basis(b)) EXPECT_TRUE(check_w1(b, l).ok()) << name;
  }
}

TEST(SepF, Examples) {
  const auto t = decide_sep_F(catalog_build("trivial"));
  ASSERT_EQ(t.outcome, Outcome::Yes);
  EXPECT_EQ(t.sigma->sigma[0].matrix, M(Q(), 1, 1, {1}));

  const auto m = decide_sep_F(catalog_build("matrix-coalg-2obj"));
  ASSERT_EQ(m.outcome, Outcome::Yes);
  EXPECT_EQ(m.sigma->sigma[0].matrix, M(Q(), 1, 1, {1}));
  EXPECT_EQ(m.sigma->sigma[1].matrix, M(Q(), 1, 1, {1}));

  const auto n = decide_sep_F(catalog_build("nonsep-F"));
  EXPECT_EQ(n.outcome, Outcome::No);
  ASSERT_TRUE(n.witness.has_value());
  EXPECT_EQ(n.witness->augmented_rank, n.witness->rank + 1);
  EXPECT_FALSE(n.sigma.has_value());
}

TEST(SepG, Examples) {
  const auto b = catalog_build("group-c2-q");
  const auto y = decide_sep_G(b);
  ASSERT_EQ(y.outcome, Outcome::Yes);
  Matrix half(Q(), 4, 1);
  half(0, 0) = frac(1, 2);
  half(3, 0) = frac(1, 2);
  EXPECT_EQ(y.lambda->lambda[0].matrix, half);
  EXPECT_EQ(b.algebra.mul.matrix * half, b.algebra.unit.matrix);

  const auto n = decide_sep_G(catalog_build("group-c2-f2"));
  EXPECT_EQ(n.outcome, Outcome::No);
  ASSERT_TRUE(n.witness.has_value());
  EXPECT_EQ(n.witness->augmented_rank, n.witness->rank + 1);

  EXPECT_EQ(decide_sep_G(catalog_build("dual-numbers-q")).outcome, Outcome::No);
}

TEST(Separability, CertificatesNormalised) {
  for (const auto& name : catalog_names()) {
    const auto b = catalog_build(name);
    const auto f = decide_sep_F(b);
    EXPECT_NE(f.outcome, Outcome::Unknown);
    if (f.outcome == Outcome::Yes) {
      EXPECT_TRUE(check_sigma_normalised(b, *f.sigma).ok()) << name;
    }
    const auto g = decide_sep_G(b);
    EXPECT_NE(g.outcome, Outcome::Unknown);
    if (g.outcome == Outcome::Yes) {
      EXPECT_TRUE(check_lambda_normalised(b, *g.lambda).ok()) << name;
    }
  }
}

// One sigma gives splittings on both the comodule and the contramodule side.
TEST(Separability, FreeSideSplitsUnits) {
  for (const auto& name : catalog_names()) {
    const auto b = catalog_build(name);
    const auto d = decide_sep_F(b);
    if (d.outcome != Outcome::Yes) continue;
    const auto objects = catalog_test_objects(name, b);
    for (const auto& [n, m] : objects.comodules) {
      const auto tau = tau_comod(b, *d.sigma, m);
      EXPECT_EQ(compose_morphisms(tau, fg_unit(b, m)), identity_morphism(b.field, m.carrier)) << name << " " << n;
    }
    for (const auto& [n, m] : objects.contramodules) {
      const auto tau = tau_contra(b, *d.sigma, m);
      EXPECT_EQ(compose_morphisms(st_counit(b, m), tau), identity_morphism(b.field, m.carrier)) << name << " " << n;
    }
  }
}

TEST(Separability, ForgetfulSideSplitsCounits) {
  for (const auto& name : catalog_names()) {
    const auto b = catalog_build(name);
    const auto d = decide_sep_G(b);
    if (d.outcome != Outcome::Yes) continue;
    const auto objects = catalog_test_objects(name, b);
    for (const auto& [n, m] : objects.entwined_comodules) {
      const auto kappa = kappa_comod(b, *d.lambda, m);
      EXPECT_EQ(compose_morphisms(fg_counit(b, m), kappa), identity_morphism(b.field, m.carrier())) << name << " " << n;
    }
    for (const auto& [n, m] : objects.entwined_contramodules) {
      const auto kappa = kappa_contra(b, *d.lambda, m);
      EXPECT_EQ(compose_morphisms(kappa, st_unit(b, m)), identity_morphism(b.field, m.carrier())) << name << " " << n;
    }
  }
}

TEST(Frobenius, DualNumbers) {
  const auto b = catalog_build("dual-numbers-q");
  const auto d = decide_frobenius(b);
  ASSERT_EQ(d.outcome, Outcome::Yes);
  EXPECT_EQ(d.lambda->lambda[0].matrix, col(Q(), {0, 1, 1, 0}));
  EXPECT_EQ(d.sigma->sigma[0].matrix, M(Q(), 1, 2, {0, 1}));
  EXPECT_TRUE(verify_frobenius_pair(b, *d.sigma, *d.lambda).ok());
}

TEST(Frobenius, GroupAlgebraTextbookPair) {
  const auto b = catalog_build("group-c2-q");
  const auto d = decide_frobenius(b);
  ASSERT_EQ(d.outcome, Outcome::Yes);
  EXPECT_TRUE(verify_frobenius_pair(b, *d.sigma, *d.lambda).ok());
  // lambda = 1 (x) 1 + x (x) x with the coefficient-of-identity functional
  const auto l = lambda_of(col(Q(), {1, 0, 0, 1}));
  const auto s = sigma_of(M(Q(), 1, 2, {1, 0}));
  EXPECT_TRUE(verify_frobenius_pair(b, s, l).ok());
}

TEST(Frobenius, LocalAlgebraExhaustiveNo) {
  const auto d = decide_frobenius(catalog_build("local-3dim-f2"));
  EXPECT_EQ(d.outcome, Outcome::No);
  ASSERT_TRUE(d.enumeration.has_value());
  EXPECT_TRUE(d.enumeration->exhaustive);
  EXPECT_EQ(d.enumeration->w1_dim, 4u);
  EXPECT_LE(d.enumeration->examined, 16u);
}

TEST(Frobenius, UnknownWhenSearchIsCut) {
  const auto b = catalog_build("local-3dim-f2", Q());
  FrobeniusOptions o;
  o.budget = 1;
  o.height = 0;
  EXPECT_EQ(decide_frobenius(b, o).outcome, Outcome::Unknown);
  EXPECT_EQ(decide_frobenius(b).outcome, Outcome::Unknown);
}

TEST(Frobenius, DeterministicAcrossThreadCounts) {
  for (const auto& name : {"local-3dim-f2", "nonsep-F", "path-a2"}) {
    const auto b = catalog_build(name);
    FrobeniusOptions one, many;
    one.threads = 1;
    many.threads = 4;
    const auto d1 = decide_frobenius(b, one);
    const auto d4 = decide_frobenius(b, many);
    EXPECT_EQ(d1.outcome, d4.outcome) << name;
    EXPECT_EQ(d1.sigma, d4.sigma) << name;
    EXPECT_EQ(d1.lambda, d4.lambda) << name;
    if (d1.enumeration && d4.enumeration) {
      EXPECT_EQ(d1.enumeration->examined, d4.enumeration->examined) << name;
    }
  }
}

TEST(Frobenius, YesCertificatesVerifyOnCatalog) {
  for (const auto& name : catalog_names()) {
    const auto b = catalog_build(name);
    const auto d = decide_frobenius(b);
    if (d.outcome != Outcome::Yes) continue;
    const auto r = verify_frobenius_pair(b, *d.sigma, *d.lambda, catalog_test_objects(name, b));
    EXPECT_TRUE(r.ok()) << name << "\n" << r.to_string();
  }
}

TEST(VerifyFrobenius, ScaledSigmaBreaksPairing) {
  const auto b = catalog_build("dual-numbers-q");
  const auto d = decide_frobenius(b);
  ASSERT_EQ(d.outcome, Outcome::Yes);
  SigmaElement s = *d.sigma;
  s.sigma[0].matrix = s.sigma[0].matrix.scaled(Scalar::from_int(Q(), 2));
  const auto r = verify_frobenius_pair(b, s, *d.lambda);
  EXPECT_TRUE(has_label(r, "Frobenius pairing"));
}

TEST(VerifyFrobenius, MembershipChecked) {
  const auto b = catalog_build("dual-numbers-q");
  const auto d = decide_frobenius(b);
  ASSERT_EQ(d.outcome, Outcome::Yes);
  EXPECT_THROW(verify_frobenius_pair(b, *d.sigma, lambda_of(col(Q(), {1, 0, 0, 0}))), MembershipViolation);
  // V1 is everything here (C = K, flip), so break sigma through lambda only
  const auto g = catalog_build("matrix-coalg-2obj");
  SigmaElement bad;
  bad.sigma.push_back(ShapedMap(M(Q(), 1, 1, {1}), TensorShape{1, 1}, TensorShape{1}));
  bad.sigma.push_back(ShapedMap(M(Q(), 1, 1, {2}), TensorShape{1, 1}, TensorShape{1}));
  const auto gd = decide_frobenius(g);
  ASSERT_EQ(gd.outcome, Outcome::Yes);
  EXPECT_THROW(verify_frobenius_pair(g, bad, *gd.lambda), MembershipViolation);
}

TEST(Cointegral, Examples) {
  const auto t = find_cointegral(catalog_build("trivial"));
  ASSERT_EQ(t.outcome, Outcome::Yes);
  EXPECT_EQ(t.cointegral->gamma[0].matrix, M(Q(), 1, 1, {1}));

  const auto b = catalog_build("group-c2-q");
  const auto q = find_cointegral(b);
  ASSERT_EQ(q.outcome, Outcome::Yes);
  EXPECT_TRUE(check_cointegral(b, *q.cointegral).ok());

  const auto f = find_cointegral(catalog_build("group-c2-f2"));
  EXPECT_EQ(f.outcome, Outcome::No);
  ASSERT_TRUE(f.witness.has_value());
  EXPECT_EQ(f.witness->augmented_rank, f.witness->rank + 1);
}

// Observed on every catalog entry and on every small bundle over F2.
TEST(Cointegral, AgreesWithForgetfulSeparability) {
  for (const auto& name : catalog_names()) {
    const auto b = catalog_build(name);
    EXPECT_EQ(find_cointegral(b).outcome, decide_sep_G(b).outcome) << name;
  }
}

TEST(Coevaluation, BasisIndependent) {
  std::mt19937 rng(3);
  for (const auto& name : {"group-c2-q", "dual-numbers-q", "local-3dim-f2"}) {
    const auto b = catalog_build(name);
    const std::size_t d = b.a_dim();
    for (int t = 0; t < 5; ++t) {
      Matrix p = random_matrix(rng, b.field, d, d);
      if (rank(p) < d) continue;
      EXPECT_EQ(coevaluation(b.algebra, p).matrix, coevaluation(b.algebra).matrix) << name;
    }
  }
}

class Averaging : public ::testing::TestWithParam<std::string> {};

TEST_P(Averaging, FixesEntwinedMorphisms) {
  const auto b = catalog_build(GetParam());
  const auto d = find_cointegral(b);
  ASSERT_EQ(d.outcome, Outcome::Yes);
  const auto& g = *d.cointegral;
  const auto objects = catalog_test_objects(GetParam(), b);
  std::size_t checked = 0;
  for (const auto& [sn, s] : objects.entwined_comodules)
    for (const auto& [tn, t] : objects.entwined_comodules) {
      std::vector<MorphismData> phis = hom_space(b, s, t);
      phis.push_back(zero_morphism(b.field, s.carrier(), t.carrier()));
      if (sn == tn) phis.push_back(identity_morphism(b.field, s.carrier()));
      for (const auto& phi : phis) {
        EXPECT_EQ(average_morphism_comod(b, g, s, t, phi), phi) << sn << " -> " << tn;
        ++checked;
      }
    }
  for (const auto& [sn, s] : objects.entwined_contramodules)
    for (const auto& [tn, t] : objects.entwined_contramodules) {
      std::vector<MorphismData> phis = hom_space(b, s, t);
      phis.push_back(zero_morphism(b.field, s.carrier(), t.carrier()));
      if (sn == tn) phis.push_back(identity_morphism(b.field, s.carrier()));
      for (const auto& phi : phis) {
        EXPECT_EQ(average_morphism_contra(b, g, s, t, phi), phi) << sn << " -> " << tn;
        ++checked;
      }
    }
  EXPECT_GE(checked, 3u);
}

TEST_P(Averaging, ProducesEntwinedMorphismsAndIsNatural) {
  const auto b = catalog_build(GetParam());
  const auto g = *find_cointegral(b).cointegral;
  const auto objects = catalog_test_objects(GetParam(), b);
  const auto& ec = objects.entwined_comodules;
  for (const auto& [sn, s] : ec)
    for (const auto& [tn, t] : ec)
      for (const auto& phi : hom_space(b, functor_G(s), functor_G(t))) {
        const auto avg = average_morphism_comod(b, g, s, t, phi);
        EXPECT_TRUE(check_morphism(b, s, t, avg).ok()) << sn << " -> " << tn;
        for (const auto& [qn, q] : ec)
          for (const auto& post : hom_space(b, t, q))
            EXPECT_EQ(compose_morphisms(post, avg), average_morphism_comod(b, g, s, q, compose_morphisms(post, phi)));
      }
  const auto& ectr = objects.entwined_contramodules;
  for (const auto& [sn, s] : ectr)
    for (const auto& [tn, t] : ectr)
      for (const auto& phi : hom_space(b, functor_S(s), functor_S(t))) {
        const auto avg = average_morphism_contra(b, g, s, t, phi);
        EXPECT_TRUE(check_morphism(b, s, t, avg).ok()) << sn << " -> " << tn;
        for (const auto& [qn, q] : ectr)
          for (const auto& post : hom_space(b, t, q))
            EXPECT_EQ(compose_morphisms(post, avg), average_morphism_contra(b, g, s, q, compose_morphisms(post, phi)));
      }
}

INSTANTIATE_TEST_SUITE_P(WithCointegral, Averaging,
                         ::testing::Values("trivial", "group-c2-q", "matrix-coalg-2obj", "nonsep-F"),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (auto& ch : s)
                             if (ch == '-') ch = '_';
                           return s;
                         });

TEST(Averaging, RejectsNonMorphism) {
  const auto b = catalog_build("group-c2-q");
  const auto g = *find_cointegral(b).cointegral;
  const auto aug = *catalog_augmentation("group-c2-q", b);
  const MorphismData bad{{M(Q(), 2, 1, {1, 0})}};
  EXPECT_THROW(average_morphism_contra(b, g, aug.regular_contramodule, aug.regular_contramodule, bad),
               InvalidMorphism);
}

TEST(Maschke, AugmentationSectionComodules) {
  const auto b = catalog_build("group-c2-q");
  const auto g = *find_cointegral(b).cointegral;
  const auto aug = *catalog_augmentation("group-c2-q", b);
  const MorphismData base{{col(Q(), {1, 0})}};  // 1 |-> 1, not A-linear
  EXPECT_FALSE(check_morphism(b, aug.trivial_comodule, aug.regular_comodule, base).ok());
  const auto s = maschke_split(b, g, aug.regular_comodule, aug.trivial_comodule, aug.comodule_augmentation, base,
                               SplitKind::Section);
  EXPECT_TRUE(check_morphism(b, aug.trivial_comodule, aug.regular_comodule, s).ok());
  EXPECT_EQ(compose_morphisms(aug.comodule_augmentation, s), identity_morphism(b.field, {1}));
  Matrix half(Q(), 2, 1);
  half(0, 0) = frac(1, 2);
  half(1, 0) = frac(1, 2);
  EXPECT_EQ(s.components[0], half);
}

TEST(Maschke, AugmentationSectionContramodules) {
  const auto b = catalog_build("group-c2-q");
  const auto g = *find_cointegral(b).cointegral;
  const auto aug = *catalog_augmentation("group-c2-q", b);
  const MorphismData base{{col(Q(), {0, 1})}};
  const auto s = maschke_split(b, g, aug.regular_contramodule, aug.trivial_contramodule,
                               aug.contramodule_augmentation, base, SplitKind::Section);
  EXPECT_TRUE(check_morphism(b, aug.trivial_contramodule, aug.regular_contramodule, s).ok());
  EXPECT_EQ(compose_morphisms(aug.contramodule_augmentation, s), identity_morphism(b.field, {1}));
}

TEST(Maschke, Retraction) {
  const auto b = catalog_build("group-c2-q");
  const auto g = *find_cointegral(b).cointegral;
  const auto aug = *catalog_augmentation("group-c2-q", b);
  // the norm element spans a copy of the trivial module inside A
  const MorphismData mono{{col(Q(), {1, 1})}};
  ASSERT_TRUE(check_morphism(b, aug.trivial_comodule, aug.regular_comodule, mono).ok());
  const MorphismData base{{M(Q(), 1, 2, {1, 0})}};
  const auto r = maschke_split(b, g, aug.trivial_comodule, aug.regular_comodule, mono, base, SplitKind::Retraction);
  EXPECT_TRUE(check_morphism(b, aug.regular_comodule, aug.trivial_comodule, r).ok());
  EXPECT_EQ(compose_morphisms(r, mono), identity_morphism(b.field, {1}));
}

TEST(Maschke, IdentityWithIdentity) {
  const auto b = catalog_build("group-c2-q");
  const auto g = *find_cointegral(b).cointegral;
  const auto aug = *catalog_augmentation("group-c2-q", b);
  const auto id = identity_morphism(b.field, {2});
  EXPECT_EQ(maschke_split(b, g, aug.regular_comodule, aug.regular_comodule, id, id, SplitKind::Section), id);
  EXPECT_EQ(maschke_split(b, g, aug.regular_contramodule, aug.regular_contramodule, id, id, SplitKind::Retraction),
            id);
}

TEST(Maschke, Errors) {
  const auto b = catalog_build("group-c2-q");
  const auto g = *find_cointegral(b).cointegral;
  const auto aug = *catalog_augmentation("group-c2-q", b);
  const MorphismData not_section{{col(Q(), {1, -1})}};
  EXPECT_THROW(maschke_split(b, g, aug.regular_comodule, aug.trivial_comodule, aug.comodule_augmentation, not_section,
                             SplitKind::Section),
               NotASection);
  const MorphismData not_entwined{{M(Q(), 1, 2, {1, 0})}};
  const MorphismData base{{col(Q(), {1, 0})}};
  EXPECT_THROW(
      maschke_split(b, g, aug.regular_comodule, aug.trivial_comodule, not_entwined, base, SplitKind::Section),
      InvalidMorphism);
}
