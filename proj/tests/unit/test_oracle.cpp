#include <random>

#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "helpers.hpp"

using namespace entwine;
using namespace testing_support;

namespace {

std::vector<int> flat(const Matrix& m) {
  std::vector<int> out;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(static_cast<int>(m(r, c).residue()));
  return out;
}

struct Dims {
  int c, a;
};

void PrintTo(const Dims& d, std::ostream* os) { *os << "c=" << d.c << " a=" << d.a; }

class MicroBundles : public ::testing::TestWithParam<Dims> {};

}  // namespace

TEST_P(MicroBundles, DecisionsMatchExhaustiveSearch) {
  const auto [c, a] = GetParam();
  const auto bundles = oracle::all_bundles(2, c, a);
  ASSERT_FALSE(bundles.empty());
  for (std::size_t i = 0; i < bundles.size(); ++i) {
    const auto& ob = bundles[i];
    const auto lib = oracle::to_library(ob);
    ASSERT_TRUE(check_bundle(lib).ok()) << i;
    const auto f = decide_sep_F(lib);
    const auto g = decide_sep_G(lib);
    const auto k = find_cointegral(lib);
    EXPECT_EQ(f.outcome == Outcome::Yes, oracle::exists_sigma(ob)) << i;
    EXPECT_EQ(g.outcome == Outcome::Yes, oracle::exists_lambda(ob)) << i;
    EXPECT_EQ(k.outcome == Outcome::Yes, oracle::exists_cointegral(ob)) << i;
    if (f.sigma) {
      EXPECT_TRUE(oracle::sigma_ok(ob, flat(f.sigma->sigma[0].matrix))) << i;
    }
    if (g.lambda) {
      EXPECT_TRUE(oracle::lambda_ok(ob, flat(g.lambda->lambda[0].matrix))) << i;
    }
    if (k.cointegral) {
      EXPECT_TRUE(oracle::gamma_ok(ob, flat(k.cointegral->gamma[0].matrix))) << i;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(F2, MicroBundles, ::testing::Values(Dims{1, 1}, Dims{1, 2}, Dims{2, 1}, Dims{2, 2}),
                         [](const auto& info) {
                           return "c" + std::to_string(info.param.c) + "a" + std::to_string(info.param.a);
                         });

TEST(MicroBundles, FrozenCounts) {
  const auto bundles = oracle::all_bundles(2, 2, 2);
  EXPECT_EQ(bundles.size(), 540u);
  std::size_t no_sigma = 0, no_lambda = 0, no_gamma = 0, lambda_gamma_differ = 0;
  for (const auto& b : bundles) {
    const bool lambda = oracle::exists_lambda(b), gamma = oracle::exists_cointegral(b);
    no_sigma += !oracle::exists_sigma(b);
    no_lambda += !lambda;
    no_gamma += !gamma;
    lambda_gamma_differ += lambda != gamma;
  }
  EXPECT_EQ(lambda_gamma_differ, 0u);
  EXPECT_EQ(no_sigma, 108u);
  EXPECT_EQ(no_lambda, 288u);
  EXPECT_EQ(no_gamma, 288u);
}

TEST(MicroBundles, AxiomChecksAgreeOnRandomEntwinings) {
  // fixed coalgebra and algebra, random 4 x 4 psi over F_2
  const auto base = oracle::all_bundles(2, 2, 2).front();
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> bit(0, 1);
  int valid = 0;
  for (int trial = 0; trial < 400; ++trial) {
    oracle::Bundle b = base;
    for (auto& v : b.psi) v = bit(rng);
    if (trial % 4 == 0) b.psi = base.psi;
    const auto lib = oracle::to_library(b);
    const bool lib_ok = check_entwining(lib.coalgebra, lib.algebra, lib.entwining).ok();
    EXPECT_EQ(lib_ok, oracle::is_entwining(b)) << trial;
    valid += lib_ok;
  }
  EXPECT_GE(valid, 100);
}

TEST(NonSeparableFreeSide, ConfirmedByOracle) {
  const auto lib = catalog_build("nonsep-F");
  oracle::Bundle ob;
  ob.p = 2;
  ob.c = {2, flat(lib.coalgebra.delta(0, 0, 0).matrix), flat(lib.coalgebra.counits[0].matrix)};
  ob.a = {2, flat(lib.algebra.mul.matrix), flat(lib.algebra.unit.matrix)};
  ob.psi = flat(lib.entwining.psi(0, 0).matrix);
  EXPECT_TRUE(oracle::is_coalgebra(2, ob.c));
  EXPECT_TRUE(oracle::is_algebra(2, ob.a));
  EXPECT_TRUE(oracle::is_entwining(ob));
  EXPECT_FALSE(oracle::exists_sigma(ob));
  EXPECT_TRUE(oracle::exists_lambda(ob));

  // it is the first such bundle in enumeration order
  for (const auto& b : oracle::all_bundles(2, 2, 2)) {
    if (oracle::exists_sigma(b)) continue;
    EXPECT_EQ(b.c.delta, ob.c.delta);
    EXPECT_EQ(b.c.counit, ob.c.counit);
    EXPECT_EQ(b.a.mul, ob.a.mul);
    EXPECT_EQ(b.a.unit, ob.a.unit);
    EXPECT_EQ(b.psi, ob.psi);
    break;
  }
}

TEST(OracleSelfCheck, CandidateChecksRejectNonCertificates) {
  const auto bundles = oracle::all_bundles(2, 1, 1);
  ASSERT_EQ(bundles.size(), 1u);
  EXPECT_TRUE(oracle::sigma_ok(bundles[0], {1}));
  EXPECT_FALSE(oracle::sigma_ok(bundles[0], {0}));
  EXPECT_TRUE(oracle::lambda_ok(bundles[0], {1}));
  EXPECT_FALSE(oracle::lambda_ok(bundles[0], {0}));
}
