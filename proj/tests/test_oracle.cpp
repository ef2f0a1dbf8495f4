#include <gtest/gtest.h>

#include "helpers.hpp"
#include "sdw/oracle.hpp"

using namespace sdw;
using namespace sdw::testing;
using oracle::Dims;

namespace {

QRingPtr dual_numbers() { return quotient(poly_ring({"x"}), {"x^2"}); }
QRingPtr fat_point() { return quotient(poly_ring({"y1", "y2"}), {"y1^2", "y1*y2", "y2^2"}); }
QRingPtr cube() { return quotient(poly_ring({"x"}), {"x^3"}); }

long long total(const Dims& d) {
  long long s = 0;
  for (const auto& [k, v] : d) s += v;
  return s;
}

}  // namespace

TEST(Oracle, FiniteAlgebras) {
  EXPECT_EQ(oracle::finite_algebra(dual_numbers()).dim(), 2);
  auto A = oracle::finite_algebra(fat_point());
  EXPECT_EQ(A.dim(), 3);
  EXPECT_TRUE(A.is_associative());
  EXPECT_TRUE(A.is_unital());
  EXPECT_TRUE(A.regular.actions_commute());
  EXPECT_TRUE(A.kills_ideal(fat_point()->generators()));
  auto W = quotient(poly_ring({"a", "b"}, {1, 2}), {"a^3", "b^2-a^2*b", "a*b^2"});
  auto B = oracle::finite_algebra(W);
  EXPECT_TRUE(B.is_associative());
  EXPECT_EQ(B.regular.dims(), (Dims{{0, 1}, {1, 1}, {2, 2}, {3, 1}, {4, 1}}));
}

TEST(Oracle, ResidueFieldAndFiniteModules) {
  auto R = cube();
  EXPECT_EQ(oracle::to_finite(PresentedModule::residue_field(R)).dim(), 1);
  auto M = coker(R, {0, 1}, {{"x", "0"}, {"-1", "x^2"}});  // e1 = x e0: cyclic, a copy of R
  auto F = oracle::to_finite(M);
  EXPECT_EQ(F.dims(), (Dims{{0, 1}, {1, 1}, {2, 1}}));
  auto T = oracle::to_finite(coker(R, {0, 1}, {{"x^2", "0"}, {"0", "x"}}));  // R/(x^2) + k(-1)
  EXPECT_EQ(T.dims(), (Dims{{0, 1}, {1, 2}}));
  EXPECT_TRUE(F.actions_commute());
  EXPECT_EQ(oracle::to_finite(PresentedModule::zero(R)).dim(), 0);
}

TEST(Oracle, RejectsPositiveDimension) {
  auto R = quotient(poly_ring({"x", "y"}), {"x*y"});
  EXPECT_THROW(oracle::to_finite(PresentedModule::ring_module(R)), std::invalid_argument);
}

TEST(Oracle, HandComputedHomAndExt) {
  auto R = dual_numbers();
  auto k = PresentedModule::residue_field(R);
  auto Rm = PresentedModule::ring_module(R);
  // Hom(k, R) is the socle x R, in degree 1
  EXPECT_EQ(oracle::oracle_hom(k, Rm), (Dims{{1, 1}}));
  EXPECT_TRUE(oracle::oracle_ext(1, k, Rm).empty());
  for (int i = 0; i <= 4; ++i) EXPECT_EQ(oracle::oracle_ext(i, k, k), (Dims{{-i, 1}})) << i;
  auto F = fat_point();
  auto kf = PresentedModule::residue_field(F);
  for (int i = 0; i <= 4; ++i) EXPECT_EQ(total(oracle::oracle_ext(i, kf, kf)), 1LL << i) << i;
  // Ext^i(k, R) over the non-Gorenstein fat point: 2, 3, 6, ...
  EXPECT_EQ(oracle::oracle_hom(kf, PresentedModule::ring_module(F)), (Dims{{1, 2}}));
  EXPECT_EQ(total(oracle::oracle_ext(1, kf, PresentedModule::ring_module(F))), 3);
}

TEST(Oracle, IdentityGivesNonzeroEndomorphisms) {
  for (const auto& R : {dual_numbers(), fat_point(), cube()}) {
    auto k = PresentedModule::residue_field(R);
    for (const auto& M : {k, PresentedModule::ring_module(R), syzygy_module(k, 1)}) {
      auto d = oracle::oracle_ext(0, M, M);
      EXPECT_GE(d[0], 1);
      EXPECT_EQ(oracle::oracle_hom(M, M), d);
    }
  }
}

TEST(Oracle, LambdaAndTranspose) {
  auto R = fat_point();
  auto A = oracle::finite_algebra(R);
  auto k = oracle::to_finite(PresentedModule::residue_field(R));
  EXPECT_EQ(oracle::lambda_kernel_dim(k, A.regular), 0);
  // k[x]/(x^3) is self-injective, so k embeds in its bidual
  auto C = oracle::finite_algebra(cube());
  auto k3 = oracle::to_finite(PresentedModule::residue_field(cube()));
  EXPECT_EQ(oracle::lambda_kernel_dim(k3, C.regular), 0);
  oracle::Resolution res(C, k3, 2);
  EXPECT_EQ(res.generators(0), std::vector<int>{0});
  EXPECT_EQ(res.generators(1), std::vector<int>{1});
  EXPECT_EQ(res.generators(2), std::vector<int>{3});
  // Tr k = coker(R(0) --x--> R(1)) = R/(x) shifted: one-dimensional
  EXPECT_EQ(oracle::transpose(res, C.regular).dims(), (Dims{{-1, 1}}));
}

TEST(Oracle, DetectsMismatch) {
  // the oracle of one module against the pipeline of another must disagree
  auto R = fat_point();
  auto k = PresentedModule::residue_field(R);
  auto Rm = PresentedModule::ring_module(R);
  auto o = oracle::oracle_ext(1, k, Rm);
  auto p = ExtComputer(Rm, Rm, 1).series(1);
  EXPECT_FALSE(o.empty());
  EXPECT_TRUE(p.numerator.is_zero());
}

TEST(Oracle, DifferentialTest) {
  std::vector<oracle::Instance> inst;
  for (const auto& R : {dual_numbers(), fat_point(), cube()}) {
    auto k = PresentedModule::residue_field(R);
    inst.push_back({"ring", R, {{"k", k}, {"R", PresentedModule::ring_module(R)}, {"Omega1(k)", syzygy_module(k, 1)}}});
  }
  auto rep = oracle::differential_test(inst, 4);
  EXPECT_EQ(rep.checks.size(), 3u * (1 + 9 + 3));
  for (const auto& c : rep.checks) EXPECT_EQ(c.verdict, Verdict::True) << c.name << " " << c.witness;
  EXPECT_TRUE(oracle::differential_test({}, 3).checks.empty());
}

TEST(Oracle, RandomModulesAgree) {
  auto R = quotient(poly_ring({"x", "y"}), {"x^2", "y^3", "x*y^2"});
  std::vector<NamedModule> mods;
  for (std::uint64_t s = 0; s < 4; ++s) mods.push_back({"random" + std::to_string(s), random_coker(R, s)});
  auto rep = oracle::differential_test({{"artinian", R, mods}}, 3);
  for (const auto& c : rep.checks) EXPECT_EQ(c.verdict, Verdict::True) << c.name << " " << c.witness;
}
