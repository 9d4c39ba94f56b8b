#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace rowconvex;

TEST(Alphabet, ParseAssignsIncreasingRanks)
{
  auto a = Alphabet::parse("a+, b-,c+");
  ASSERT_EQ(a.size(), 3u);
  EXPECT_EQ(a.letter("a+"), plus_letter(1));
  EXPECT_EQ(a.letter("b-"), minus_letter(2));
  EXPECT_EQ(a.letter("c+"), plus_letter(3));
  EXPECT_EQ(a.spec(), "a+,b-,c+");
  EXPECT_TRUE(Alphabet::parse("").empty());
}

TEST(Alphabet, RejectsBadInput)
{
  EXPECT_THROW(Alphabet::parse("a+,,b+"), Error);
  EXPECT_THROW(Alphabet::parse("a"), Error);
  EXPECT_THROW(Alphabet::parse("a+,a-"), Error);
  auto a = Alphabet::parse("a+");
  try {
    a.letter("a-");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownLetter);
  }
}

TEST(Alphabet, SignedRelationsOnAllPairs)
{
  auto a = Alphabet::parse("a+,b-,c+,d-");
  for (const auto& x : a.letters())
    for (const auto& y : a.letters()) {
      bool lt = x.rank < y.rank;
      bool eq = x == y;
      EXPECT_EQ(less_plus(x, y), lt || (eq && x.is_plus()));
      EXPECT_EQ(less_minus(x, y), lt || (eq && x.is_minus()));
      // not (x >- y) is the same as x <+ y
      EXPECT_EQ(!greater_minus(x, y), less_plus(x, y));
    }
}

TEST(Alphabet, WithoutDropsOneLetter)
{
  auto a = Alphabet::parse("a+,b-,c+");
  auto b = a.without(a.letter("b-"));
  EXPECT_EQ(b.spec(), "a+,c+");
  EXPECT_EQ(b.letter("c+").rank, 3);
}

TEST(Shape, WorkedShapeIsAlreadySorted)
{
  auto s = make_shape({{3, 4}, {1, 4}, {3, 3}, {2, 3}});
  EXPECT_EQ(s.permutation, (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(s.shape.num_cells(), 9);
  EXPECT_EQ(s.shape.rows_in_column(3), (std::vector<int>{0, 1, 2, 3}));
}

TEST(Shape, SortsByDescendingEnd)
{
  auto s = make_shape({{1, 2}, {1, 3}});
  EXPECT_EQ(s.shape.row(0), (Row{1, 3}));
  EXPECT_EQ(s.shape.row(1), (Row{1, 2}));
  EXPECT_EQ(s.permutation, (std::vector<int>{1, 0}));
}

TEST(Shape, Errors)
{
  try {
    make_shape({{3, 2}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyRow);
  }
  try {
    make_shape({});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyShape);
  }
}

TEST(Shape, SingleCell)
{
  auto d = fixtures::shape({{1, 1}});
  EXPECT_EQ(d.num_rows(), 1);
  EXPECT_EQ(d.num_cells(), 1);
  EXPECT_TRUE(d.has_cell(0, 1));
  EXPECT_FALSE(d.has_cell(0, 2));
}

TEST(Shape, PowerShapeRepeatsRows)
{
  auto d = fixtures::weyl31();
  auto d2 = power_shape(d, 2);
  ASSERT_EQ(d2.num_rows(), 4);
  EXPECT_EQ(d2.row(0), d.row(0));
  EXPECT_EQ(d2.row(1), d.row(0));
  EXPECT_EQ(d2.row(2), d.row(1));
  EXPECT_EQ(d2.row(3), d.row(1));
}

TEST(Shape, SkewDetection)
{
  EXPECT_TRUE(fixtures::shape({{2, 3}, {1, 2}}).is_skew());
  EXPECT_TRUE(fixtures::shape({{1, 3}, {1, 1}}).is_skew());
  EXPECT_FALSE(fixtures::weyl31().is_skew());
}

TEST(Shape, EnumerationBudget)
{
  // columns exactly 1..C, every order of rows sharing an end column
  EXPECT_EQ(enumerate_shapes(1).size(), 1u);
  EXPECT_EQ(enumerate_shapes(5).size(), 174u);
  EXPECT_EQ(enumerate_shapes(6).size(), 625u);
  for (const auto& d : enumerate_shapes(4)) {
    EXPECT_LE(d.num_cells(), 4);
    for (int c = 1; c <= d.max_column(); ++c) EXPECT_GT(d.column_height(c), 0);
  }
}
