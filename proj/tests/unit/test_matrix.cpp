#include <gtest/gtest.h>

#include "rht/matrix.hpp"

using namespace rht;

namespace {

MatrixQ m(std::vector<std::vector<long>> rows) {
  std::vector<VectorQ> dense;
  for (const auto& r : rows) {
    VectorQ v;
    for (long x : r) v.emplace_back(x);
    dense.push_back(v);
  }
  return MatrixQ::from_dense(dense);
}

}  // namespace

TEST(Rational, LowestTermsAndParsing) {
  EXPECT_EQ(make_rational(6, -4), make_rational(-3, 2));
  EXPECT_EQ(to_string(make_rational(6, -4)), "-3/2");
  EXPECT_EQ(parse_rational("-7/21"), make_rational(-1, 3));
  EXPECT_EQ(parse_rational("+5"), Rational(5));
  EXPECT_EQ(to_string(parse_rational("0/9")), "0");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}

TEST(Matrix, NoStoredZeros) {
  MatrixQ a(2, 2);
  a.set(0, 1, 3);
  a.add(0, 1, -3);
  EXPECT_EQ(a.nonzeros(), 0u);
  EXPECT_THROW(a.set(2, 0, 1), DimensionError);
}

TEST(Rref, Identity) {
  const auto r = rref(MatrixQ::identity(2));
  EXPECT_EQ(r.rank, 2u);
  EXPECT_EQ(r.pivot_cols, (std::vector<std::size_t>{0, 1}));
}

TEST(Rref, ZeroMatrix) {
  const auto r = rref(MatrixQ(3, 4));
  EXPECT_EQ(r.rank, 0u);
  EXPECT_TRUE(r.pivot_cols.empty());
}

TEST(Rref, RankOneByHand) {
  // [[1,2],[2,4]] -> [[1,2],[0,0]]
  const auto r = rref(m({{1, 2}, {2, 4}}));
  EXPECT_EQ(r.rank, 1u);
  EXPECT_EQ(r.pivot_cols, (std::vector<std::size_t>{0}));
  EXPECT_EQ(r.reduced, m({{1, 2}, {0, 0}}));
}

TEST(Rref, SparsePathMatchesDensePath) {
  const auto a = m({{0, 3, 1, 0}, {2, 0, 0, 4}, {2, 3, 1, 4}});
  const auto dense = rref(a, {64});
  const auto sparse = rref(a, {0});
  EXPECT_EQ(dense.reduced, sparse.reduced);
  EXPECT_EQ(dense.rank, 2u);
}

TEST(Kernel, IdentityHasNone) { EXPECT_TRUE(kernel_basis(MatrixQ::identity(3)).empty()); }

TEST(Kernel, ZeroMapIsEverything) {
  const auto k = kernel_basis(MatrixQ(2, 3));
  ASSERT_EQ(k.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(k[i][j], Rational(i == j ? 1 : 0));
}

TEST(Kernel, SingleRow) {
  const auto k = kernel_basis(m({{1, 1}}));
  ASSERT_EQ(k.size(), 1u);
  // Direct solve: x + y = 0 with y free gives (-1, 1), a multiple of (1, -1).
  EXPECT_EQ(k[0], (VectorQ{-1, 1}));
}

TEST(Solve, Examples) {
  EXPECT_EQ(*solve(MatrixQ::identity(2), {1, 2}), (VectorQ{1, 2}));
  EXPECT_FALSE(solve(m({{1, 2}, {2, 4}}), {1, 1}).has_value());
  EXPECT_EQ(*solve(m({{2}}), {1}), (VectorQ{make_rational(1, 2)}));
  EXPECT_THROW(solve(MatrixQ::identity(2), {1}), DimensionError);
}

TEST(SpanBuilder, GreedyComplement) {
  SpanBuilder s(3);
  EXPECT_TRUE(s.insert({1, 1, 0}));
  EXPECT_TRUE(s.insert({0, 1, 1}));
  EXPECT_FALSE(s.insert({1, 2, 1}));
  EXPECT_TRUE(s.contains({2, 0, -2}));
  EXPECT_TRUE(s.insert({0, 0, 1}));
  EXPECT_EQ(s.rank(), 3u);
}

TEST(Matrix, ExactnessWithLargeEntries) {
  // Entries whose products overflow 64 bits stay exact.
  MatrixQ a(2, 2);
  const Rational big("123456789012345678901234567890");
  a.set(0, 0, big);
  a.set(0, 1, 1);
  a.set(1, 0, big * big);
  a.set(1, 1, big);
  EXPECT_EQ(rank(a), 1u);
}
