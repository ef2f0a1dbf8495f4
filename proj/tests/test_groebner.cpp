#include <gtest/gtest.h>

#include <random>

#include "sdw/groebner.hpp"
#include "sdw/poly_parse.hpp"

using namespace sdw;

namespace {

RingPtr make_ring(std::vector<std::string> names, std::vector<int> weights = {}) {
  return std::make_shared<PolyRing>(PrimeField(), std::move(names), std::move(weights));
}

Polynomial P(const RingPtr& r, const char* s) { return parse_polynomial(r, s); }

FreeElement vec(const FreeModule& F, std::initializer_list<const char*> comps) {
  std::vector<Polynomial> ps;
  for (auto c : comps) ps.push_back(P(F.ring(), c));
  return F.from_components(ps);
}

}  // namespace

TEST(Field, ArithmeticAndInverse) {
  PrimeField F;
  EXPECT_EQ(F.characteristic(), 32003u);
  for (PrimeField::Elem a : {1u, 2u, 17u, 32002u}) EXPECT_EQ(F.mul(a, F.inv(a)), 1u);
  EXPECT_EQ(F.from_int(-1), 32002u);
  EXPECT_EQ(F.to_signed(32002u), -1);
  EXPECT_THROW(PrimeField(32004), std::invalid_argument);
}

TEST(Monomial, GrevlexOrder) {
  auto R = make_ring({"x", "y", "z"});
  auto m = [&](int a, int b, int c) {
    int e[] = {a, b, c};
    return R->make(e);
  };
  EXPECT_GT(PolyRing::compare(m(2, 0, 0), m(0, 1, 1)), 0);  // x^2 > yz
  EXPECT_GT(PolyRing::compare(m(1, 1, 0), m(1, 0, 1)), 0);  // xy > xz
  EXPECT_GT(PolyRing::compare(m(0, 2, 0), m(1, 0, 1)), 0);  // y^2 > xz
  EXPECT_GT(PolyRing::compare(m(0, 0, 2), m(1, 0, 0)), 0);  // degree first
  EXPECT_TRUE(m(1, 0, 1).divides(m(2, 1, 1)));
  EXPECT_FALSE(m(0, 2, 0).divides(m(2, 1, 1)));
  EXPECT_THROW(m(100, 0, 0) * m(100, 0, 0), std::overflow_error);
}

TEST(Monomial, WeightedDegree) {
  auto R = make_ring({"a", "b"}, {2, 3});
  EXPECT_EQ(P(R, "a^3").homogeneous_degree(), 6);
  EXPECT_TRUE(P(R, "a^3 - b^2").is_homogeneous());
  EXPECT_FALSE(P(R, "a - b").is_homogeneous());
}

TEST(Polynomial, ParseAndPrint) {
  auto R = make_ring({"x", "y"});
  EXPECT_EQ(P(R, "(x+y)^2 - 2*x*y").to_string(), "x^2 + y^2");
  EXPECT_EQ(P(R, "x - x").to_string(), "0");
  EXPECT_EQ(P(R, "3x").to_string(), "3*x");
  EXPECT_THROW(P(R, "x + w"), ParseError);
}

TEST(Polynomial, RingIdentityProperties) {
  auto R = make_ring({"x", "y", "z"});
  std::mt19937 rng(7);
  auto rand_poly = [&] {
    std::vector<Term> ts;
    std::uniform_int_distribution<int> e(0, 3), c(0, 32002);
    for (int i = 0; i < 5; ++i) {
      int ex[] = {e(rng), e(rng), e(rng)};
      ts.push_back({R->make(ex), static_cast<PrimeField::Elem>(c(rng))});
    }
    return Polynomial(R, ts);
  };
  for (int trial = 0; trial < 50; ++trial) {
    auto a = rand_poly(), b = rand_poly(), c = rand_poly();
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a - a, Polynomial(R));
  }
}

TEST(Groebner, NormalFormSingleRelation) {
  auto R = make_ring({"x", "y", "z"});
  auto gb = ideal_groebner(R, {P(R, "x^2 - y*z")});
  EXPECT_EQ(reduce_polynomial(P(R, "x^2"), gb), P(R, "y*z"));
}

TEST(Groebner, IdealBasisContainsNewElement) {
  auto R = make_ring({"x", "y", "z"});
  auto gb = ideal_groebner(R, {P(R, "x^2 - y*z"), P(R, "x*y")});
  bool found = false;
  for (const auto& g : gb)
    if (g == P(R, "y^2*z")) found = true;
  EXPECT_TRUE(found);
  EXPECT_TRUE(reduce_polynomial(P(R, "y^2*z"), gb).is_zero());
  EXPECT_TRUE(reduce_polynomial(P(R, "x^3"), gb).is_zero());  // x^3 = x*yz mod, x*y*z reduces by xy
}

TEST(Groebner, TwistedCubicIsReducedBasis) {
  auto R = make_ring({"a", "b", "c", "d"});
  auto gb = ideal_groebner(R, {P(R, "b^2 - a*c"), P(R, "b*c - a*d"), P(R, "c^2 - b*d")});
  EXPECT_EQ(gb.size(), 3u);
  FreeModule F(R, {0});
  std::vector<FreeElement> els;
  for (auto& g : gb) els.push_back(F.basis_times(0, g));
  EXPECT_TRUE(verify_groebner(GroebnerBasis::assume(F, {}, els)));
}

TEST(Groebner, SyzygiesOfTwoVariables) {
  auto R = make_ring({"x", "y"});
  FreeModule F(R, {0});
  auto syz = syzygies(F, {}, {vec(F, {"x"}), vec(F, {"y"})});
  ASSERT_EQ(syz.size(), 1u);
  FreeModule G(R, {1, 1});
  auto expect = vec(G, {"y", "-x"});
  auto s = syz[0];
  if (s.front().coeff != expect.front().coeff) s = G.scaled(s, R->one(), R->field().neg(1));
  EXPECT_EQ(G.to_string(s), G.to_string(expect));
}

TEST(Groebner, SyzygiesOverQuotient) {
  auto R = make_ring({"x"});
  auto I = ideal_groebner(R, {P(R, "x^2")});
  FreeModule F(R, {0});
  auto syz = syzygies(F, I, {vec(F, {"x"})});
  ASSERT_EQ(syz.size(), 1u);
  FreeModule G(R, {1});
  EXPECT_EQ(G.to_string(syz[0]), "[x]");
}

TEST(Groebner, SyzygiesAreSyzygiesAndComplete) {
  // columns of the 2x3 matrix with entries in k[x,y,z]/(xz)
  auto R = make_ring({"x", "y", "z"});
  auto I = ideal_groebner(R, {P(R, "x*z")});
  FreeModule F(R, {0, 0});
  std::vector<FreeElement> cols = {vec(F, {"x", "y"}), vec(F, {"y", "z"}), vec(F, {"z", "x"})};
  auto syz = syzygies(F, I, cols);
  ASSERT_FALSE(syz.empty());
  auto ringF = GroebnerBasis::assume(F, I, {});
  FreeModule G(R, {1, 1, 1});
  for (const auto& s : syz) {
    FreeElement img;
    for (std::uint32_t p = 0; p < 3; ++p)
      img = F.add(img, F.times(cols[p], G.component(s, p)));
    EXPECT_TRUE(ringF.normal_form(img).empty()) << G.to_string(s);
  }
  // Hilbert-series check: the image of the syzygies equals the kernel in degrees <= 4
  GbOptions opt;
  opt.track = true;
  auto res = groebner(F, I, cols, opt);
  auto kerGb = groebner(G, I, syz);
  auto image_hs = hilbert_series(res.basis);
  auto ker_hs = hilbert_series(kerGb.basis);
  auto F_hs = hilbert_series(GroebnerBasis::assume(F, I, {}));
  // G / ker is the image: dim (G/ker)_d = dim F_d - dim (F/im)_d
  auto f = F_hs.values(0, 5), q = image_hs.values(0, 5), k = ker_hs.values(0, 5);
  for (int d = 0; d <= 5; ++d) EXPECT_EQ(k[d], f[d] - q[d]) << "degree " << d;
}

TEST(Groebner, LiftReconstructsVector) {
  auto R = make_ring({"x", "y", "z"});
  FreeModule F(R, {0, 0});
  std::vector<FreeElement> gens = {vec(F, {"x", "y"}), vec(F, {"y", "z"})};
  GbOptions opt;
  opt.track = true;
  auto res = groebner(F, {}, gens, opt);
  auto target = F.add(F.times(gens[0], P(R, "z^2")), F.times(gens[1], P(R, "x*y - y^2")));
  auto c = res.basis.lift(target);
  ASSERT_TRUE(c.has_value());
  const auto& G = res.basis.generator_module();
  FreeElement back;
  for (int i = 0; i < 2; ++i) back = F.add(back, F.times(gens[i], G.component(*c, i)));
  EXPECT_EQ(F.to_string(back), F.to_string(target));
  EXPECT_FALSE(res.basis.lift(vec(F, {"x", "0"})).has_value());
}

TEST(Groebner, RejectsInhomogeneousInput) {
  auto R = make_ring({"x", "y"});
  EXPECT_THROW(ideal_groebner(R, {P(R, "x^2 - y")}), std::invalid_argument);
}

TEST(Groebner, RandomIdealsVerify) {
  auto R = make_ring({"x", "y", "z", "w"});
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> c(0, 5);
  auto quad = [&] {
    std::vector<Term> ts;
    const char* mons[] = {"x^2", "x*y", "y^2", "x*z", "y*z", "z^2", "x*w", "w^2", "z*w", "y*w"};
    Polynomial p(R);
    for (auto m : mons) p = p + P(R, m).scaled(c(rng));
    return p;
  };
  FreeModule F(R, {0});
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Polynomial> gens = {quad(), quad(), quad()};
    auto gb = ideal_groebner(R, gens);
    std::vector<FreeElement> els;
    for (auto& g : gb) els.push_back(F.basis_times(0, g));
    EXPECT_TRUE(verify_groebner(GroebnerBasis::assume(F, {}, els)));
    for (auto& g : gens) EXPECT_TRUE(reduce_polynomial(g, gb).is_zero());
  }
}

TEST(Hilbert, CrossingLines) {
  auto R = make_ring({"x", "y"});
  auto hs = hilbert_numerator(*R, {R->make(std::vector<int>{1, 1})});
  HilbertSeries H{hs, R->weights()};
  EXPECT_EQ(H.values(0, 4), (std::vector<long long>{1, 2, 2, 2, 2}));
  EXPECT_EQ(monomial_dimension(*R, {R->make(std::vector<int>{1, 1})}), 1);
}

TEST(Hilbert, DimensionEdgeCases) {
  auto R = make_ring({"x", "y", "z"});
  EXPECT_EQ(monomial_dimension(*R, {}), 3);
  EXPECT_EQ(monomial_dimension(*R, {R->one()}), -1);
  EXPECT_EQ(monomial_dimension(*R, {R->var(0), R->var(1), R->var(2)}), 0);
}

TEST(Hilbert, WeightedNumericalSemigroupRing) {
  // k[t^3, t^4, t^5] = k[a,b,c]/(b^2 - ac, a^3 - bc, c^2 - a^2 b), weights 3,4,5
  auto R = make_ring({"a", "b", "c"}, {3, 4, 5});
  auto I = ideal_groebner(R, {P(R, "b^2 - a*c"), P(R, "a^3 - b*c"), P(R, "c^2 - a^2*b")});
  FreeModule F(R, {0});
  auto hs = hilbert_series(GroebnerBasis::assume(F, I, {}));
  // semigroup <3,4,5> contains 0,3,4,5,6,...
  EXPECT_EQ(hs.values(0, 9), (std::vector<long long>{1, 0, 0, 1, 1, 1, 1, 1, 1, 1}));
}
