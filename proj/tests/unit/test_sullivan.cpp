#include <gtest/gtest.h>

#include "rht/kahler.hpp"
#include "rht/sullivan.hpp"

using namespace rht;

namespace {

Presentation ring(const std::vector<Generator>& gens, const std::vector<std::string>& rels,
                  std::optional<int> m = std::nullopt) {
  auto alg = FreeGCA::make(gens);
  std::vector<Polynomial> ps;
  for (const auto& r : rels) ps.push_back(parse_poly(r, alg));
  return Presentation(alg, ps, m);
}

Presentation wedge() { return ring({{"a", 2}, {"b", 2}}, {"a^2", "a*b", "b^2"}, 2); }

HomotopyTable table(std::map<int, std::size_t> dims, int through) {
  HomotopyTable t;
  t.dims = std::move(dims);
  t.computed_through = through;
  return t;
}

}  // namespace

TEST(Model, ProjectiveSpace) {
  const auto [s, t] = build_bigraded_model(ring_projective_space(3), 8);
  EXPECT_EQ(t.dims, (std::map<int, std::size_t>{{2, 1}, {7, 1}}));
  ASSERT_EQ(s.ambient->size(), 2u);
  EXPECT_EQ(s.ambient->generator(1).degree, 7);
  EXPECT_EQ(s.differential[1].to_string(), "y^4");
}

TEST(Model, TwoSphere) {
  const auto [s, t] = build_bigraded_model(ring({{"y", 2}}, {"y^2"}), 4);
  EXPECT_EQ(t.dims, (std::map<int, std::size_t>{{2, 1}, {3, 1}}));
}

TEST(Model, WedgeOfSpheres) {
  const auto h = wedge();
  const auto [s, t] = build_bigraded_model(h, 4);
  EXPECT_EQ(t.dim(2), 2u);
  EXPECT_EQ(t.dim(3), 3u);
  EXPECT_EQ(t.dim(3), pi3_from_cohomology(h));
}

TEST(Model, DifferentialIsDecomposableAndSquaresToZero) {
  const auto [s, t] = build_bigraded_model(ring_diamond_c(), 8);
  const auto d = s.derivation();
  for (std::size_t i = 0; i < s.ambient->size(); ++i) {
    EXPECT_TRUE(d.apply(s.differential[i]).is_zero()) << s.ambient->generator(i).name;
    for (const auto& [m, c] : s.differential[i].terms()) EXPECT_GE(m.length(), 2);
  }
}

TEST(Model, RejectsDegreeOneGenerators) {
  EXPECT_THROW(ModelBuilder(ring({{"e", 1}}, {})), UnsupportedInputError);
}

TEST(ModelCohomology, ProjectiveSpace) {
  const auto [s, t] = build_bigraded_model(ring_projective_space(3), 8);
  EXPECT_EQ(cohomology_of_model(s, 6).dim, 1u);
  EXPECT_EQ(cohomology_of_model(s, 8).dim, 0u);
  EXPECT_EQ(cohomology_of_model(s, 1).dim, 0u);
  EXPECT_THROW(cohomology_of_model(s, 9), InputError);
}

TEST(ModelCohomology, MatchesRingThroughWindow) {
  const auto h = ring_diamond_c();
  const auto [s, t] = build_bigraded_model(h, 8);
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(cohomology_of_model(s, n).dim, h.dim(n)) << n;
}

TEST(Pure, DiamondModels) {
  const auto b = is_pure(build_bigraded_model(ring_diamond_b(), 8).first);
  ASSERT_TRUE(b);
  EXPECT_EQ(b->even_count(), 2u);
  EXPECT_EQ(b->odd_count(), 2u);
  const auto c = is_pure(build_bigraded_model(ring_diamond_c(), 8).first);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->even_count(), 3u);
  EXPECT_EQ(c->odd_count(), 3u);
}

TEST(Pure, OddGeneratorInBoundaryIsNotPure) {
  SullivanAlgebra s;
  s.ambient = FreeGCA::make({{"y", 2}, {"x", 3}, {"u", 3}, {"z", 5}});
  const auto x = Polynomial::generator(s.ambient, "x");
  const auto u = Polynomial::generator(s.ambient, "u");
  s.differential = {Polynomial(s.ambient), Polynomial(s.ambient), Polynomial(s.ambient), x * u};
  s.stage = {2, 3, 3, 5};
  s.computed_through = 5;
  EXPECT_FALSE(is_pure(s).has_value());
}

TEST(Koszul, DiamondBIsAcyclic) {
  const auto data = is_pure(build_bigraded_model(ring_diamond_b(), 8).first);
  ASSERT_TRUE(data);
  for (auto v : koszul_homology(*data, 1, 12)) EXPECT_EQ(v, 0u);
}

TEST(Koszul, NonRegularPairHasSyzygyAtWeightEight) {
  auto q = FreeGCA::make({{"y", 2}});
  const PureSullivanData data(q, {{"x1", 3}, {"x2", 5}},
                              {parse_poly("y^2", q), parse_poly("y^3", q)});
  const auto h1 = koszul_homology(data, 1, 10);
  EXPECT_GE(h1[8], 1u);
  // Weight 6 already carries the cycle x2 - y x1.
  EXPECT_EQ(h1[6], 1u);
  EXPECT_FALSE(is_regular_sequence(data).regular);
}

TEST(Koszul, H0IsTheQuotient) {
  for (const auto& h : {ring_diamond_b(2), ring_diamond_c(1, -1, 2, 0)}) {
    const auto data = is_pure(build_bigraded_model(h, 8).first);
    ASSERT_TRUE(data);
    const auto h0 = koszul_homology(*data, 0, 10);
    EXPECT_EQ(h0, hilbert_series(data->quotient(), 10));
    EXPECT_EQ(h0, hilbert_series(h, 10));
  }
}

TEST(Regular, DiamondBoundaries) {
  for (const auto& beta : {Rational(-2), Rational(0), Rational(1), Rational(7, 3)}) {
    const auto data = is_pure(build_bigraded_model(ring_diamond_b(beta), 8).first);
    ASSERT_TRUE(data);
    const auto r = is_regular_sequence(*data);
    EXPECT_TRUE(r.regular) << r.reason;
    EXPECT_EQ(r.radical_power, 4);
    EXPECT_EQ(r.socle_degree, 6);
  }
  const auto c = is_pure(build_bigraded_model(ring_diamond_c(), 8).first);
  const auto rc = is_regular_sequence(*c);
  EXPECT_TRUE(rc.regular);
  EXPECT_EQ(rc.radical_power, 4);
}

TEST(Regular, DegenerateSquarePair) {
  auto q = FreeGCA::make({{"y1", 2}, {"y2", 2}});
  const PureSullivanData data(q, {{"x1", 3}, {"x2", 3}},
                              {parse_poly("y1^2", q), parse_poly("y1*y2", q)});
  const auto r = is_regular_sequence(data);
  EXPECT_FALSE(r.regular);
  // Monomial oracle: y2^k survives in every even degree.
  const auto hs = hilbert_series(data.quotient(), 16);
  for (int n = 2; n <= 16; n += 2) EXPECT_GE(hs[n], 1u);
}

TEST(Regular, MoreBoundariesThanGenerators) {
  auto q = FreeGCA::make({{"y", 2}});
  const PureSullivanData data(q, {{"x1", 3}, {"x2", 5}},
                              {parse_poly("y^2", q), parse_poly("y^3", q)});
  EXPECT_NE(is_regular_sequence(data).reason.find("|P| > |Q|"), std::string::npos);
}

TEST(FH, ProjectiveSpaceAudit) {
  const auto a = check_fh_bounds(table({{2, 1}, {7, 1}}, 11), 6);
  EXPECT_TRUE(a.all_pass());
  EXPECT_EQ(a.check("(i)").lhs, 7);
  EXPECT_EQ(a.check("(i)").rhs, 11);
  EXPECT_EQ(a.check("(ii)").lhs, 2);
  EXPECT_EQ(a.check("(iii)").lhs, 6);
  EXPECT_EQ(a.check("(iv)").lhs, 5);
}

TEST(FH, DiamondBIdentity) {
  const auto a = check_fh_bounds(table({{2, 2}, {3, 1}, {5, 1}}, 11), 6);
  EXPECT_TRUE(a.all_pass());
  EXPECT_EQ(a.check("(iii)").lhs, 6);
}

TEST(FH, TooMuchSecondHomotopy) {
  const auto a = check_fh_bounds(table({{2, 4}}, 11), 6);
  EXPECT_FALSE(a.check("(ii)").pass);
  EXPECT_EQ(a.check("(ii)").lhs, 8);
  EXPECT_EQ(a.check("(ii)").rhs, 6);
  EXPECT_THROW(check_fh_bounds(table({{2, 1}}, 5), 6), InputError);
}

TEST(Dichotomy, ProjectiveSpace) {
  const auto v = classify_dichotomy(ring_projective_space(3), 11);
  EXPECT_EQ(v.kind, DichotomyVerdict::Kind::Elliptic);
  EXPECT_EQ(v.table.dims, (std::map<int, std::size_t>{{2, 1}, {7, 1}}));
  EXPECT_GE(v.table.computed_through, 11);
}

TEST(Dichotomy, DiamondC) {
  const auto v = classify_dichotomy(ring_diamond_c(), 11);
  EXPECT_EQ(v.kind, DichotomyVerdict::Kind::Elliptic);
  EXPECT_EQ(v.table.dims, (std::map<int, std::size_t>{{2, 3}, {3, 3}}));
}

TEST(Dichotomy, WedgeIsHyperbolic) {
  const auto v = classify_dichotomy(wedge(), 3);
  EXPECT_EQ(v.kind, DichotomyVerdict::Kind::Hyperbolic);
  ASSERT_TRUE(v.violated_bound);
  EXPECT_EQ(v.violated_bound->name, "(i)");
  EXPECT_EQ(v.table.dim(3), 3u);
}

TEST(Dichotomy, BetaIndependence) {
  const auto ref = classify_dichotomy(ring_diamond_b(0), 11).table.dims;
  for (const auto& beta : {Rational(-2), Rational(1), Rational(7, 3), Rational(5)}) {
    const auto v = classify_dichotomy(ring_diamond_b(beta), 11);
    EXPECT_EQ(v.kind, DichotomyVerdict::Kind::Elliptic);
    EXPECT_EQ(v.table.dims, ref);
  }
  EXPECT_EQ(ref, (std::map<int, std::size_t>{{2, 2}, {3, 1}, {5, 1}}));
}

TEST(Dichotomy, DiamondCParameterIndependence) {
  const auto v = classify_dichotomy(ring_diamond_c(1, 2, -1, Rational(1, 2)), 11);
  EXPECT_EQ(v.kind, DichotomyVerdict::Kind::Elliptic);
  EXPECT_EQ(v.table.dims, (std::map<int, std::size_t>{{2, 3}, {3, 3}}));
}

TEST(Euler, Reports) {
  const auto c = ring_diamond_c();
  const auto rc = euler_characteristics(classify_dichotomy(c, 11).table, c);
  EXPECT_EQ(rc.topological, 8);
  EXPECT_EQ(rc.homotopy, 0);
  EXPECT_TRUE(rc.consistent_with_elliptic);

  const auto p3 = ring_projective_space(3);
  const auto rp = euler_characteristics(classify_dichotomy(p3, 11).table, p3);
  EXPECT_EQ(rp.topological, 4);
  EXPECT_EQ(rp.homotopy, 0);

  const auto bad = euler_characteristics(table({{2, 1}}, 11), p3);
  EXPECT_EQ(bad.homotopy, 1);
  EXPECT_FALSE(bad.consistent_with_elliptic);
  EXPECT_FALSE(bad.flags.empty());
}

TEST(Fibration, DiamondBDegreesAreLineAndPlane) {
  // P1 -> X -> P2: the model degrees of X are those of P1 and P2 together.
  auto degrees = [](const Presentation& h) {
    return classify_dichotomy(h, 11).table.generator_degrees();
  };
  auto fibre = degrees(ring_projective_space(1));
  const auto base = degrees(ring_projective_space(2));
  EXPECT_EQ(fibre, (std::vector<int>{2, 3}));
  EXPECT_EQ(base, (std::vector<int>{2, 5}));
  fibre.insert(fibre.end(), base.begin(), base.end());
  std::sort(fibre.begin(), fibre.end());
  EXPECT_EQ(degrees(ring_diamond_b()), fibre);
}
