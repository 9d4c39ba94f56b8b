#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace rowconvex;

namespace {

Strip columns_strip(std::vector<int> cols)
{
  // dominance only looks at the column multiset
  Strip s;
  s.columns = std::move(cols);
  return s;
}

} // namespace

TEST(Branching, HorizontalStripsOfOneRow)
{
  auto d = fixtures::shape({{1, 2}});
  auto strips = enumerate_strips(d, StripKind::horizontal, plus_letter(1));
  ASSERT_EQ(strips.size(), 3u);
  EXPECT_TRUE(strips[0].cells.empty());
  EXPECT_EQ(strips[1].cells, (std::vector<Cell>{{0, 1}}));
  EXPECT_EQ(strips[2].cells, (std::vector<Cell>{{0, 1}, {0, 2}}));
}

TEST(Branching, VerticalStripsOfOneRow)
{
  auto d = fixtures::shape({{1, 2}});
  auto strips = enumerate_strips(d, StripKind::vertical, minus_letter(1));
  ASSERT_EQ(strips.size(), 2u);
  EXPECT_TRUE(strips[0].cells.empty());
  EXPECT_EQ(strips[1].cells, (std::vector<Cell>{{0, 1}}));
}

TEST(Branching, FlagsExcludingLetterLeaveEmptyStrip)
{
  auto a = Alphabet::parse("a+,b+");
  auto B = a.letter("b+");
  Flags fl{Word(3, B), Word(3, B)};
  auto strips = enumerate_strips(fixtures::weyl31(), StripKind::horizontal, a.letter("a+"), fl);
  ASSERT_EQ(strips.size(), 1u);
  EXPECT_TRUE(strips[0].cells.empty());
}

TEST(Branching, StripsMatchLetterCellsOfStraightTableaux)
{
  for (const auto& spec : {"a+,b+", "a-,b+", "a+,b-,c-", "a-,b-"}) {
    auto a = Alphabet::parse(spec);
    const Letter low = a.letters().front();
    const auto kind = strip_kind_for(low);
    for (const auto& d : enumerate_shapes(4)) {
      std::set<std::vector<Cell>> seen;
      for (const auto& t : enumerate_straight(d, a)) {
        auto cells = letter_cells(t, low);
        std::sort(cells.begin(), cells.end());
        seen.insert(cells);
      }
      std::set<std::vector<Cell>> listed;
      for (const auto& e : enumerate_strips(d, kind, low)) {
        listed.insert(e.cells);
        // leftmost block per row, at most one cell per row when vertical
        std::map<int, std::vector<int>> by_row;
        for (const auto& [i, c] : e.cells) by_row[i].push_back(c);
        for (const auto& [i, cols] : by_row) {
          EXPECT_EQ(cols.front(), d.row(i).start);
          EXPECT_EQ(cols.back() - cols.front() + 1, static_cast<int>(cols.size()));
          if (kind == StripKind::vertical) EXPECT_EQ(cols.size(), 1u);
        }
        auto back = strip_from_columns(d, kind, e.columns);
        ASSERT_TRUE(back) << d.describe();
        EXPECT_EQ(*back, e);
        EXPECT_NO_THROW(remove_strip(d, e));
      }
      // every strip that is realized by a straight tableau whose other
      // letters are larger is listed
      for (const auto& cells : seen) EXPECT_TRUE(listed.count(cells)) << d.describe();
    }
  }
}

TEST(Branching, StripFromColumnsEdgeCases)
{
  auto d = fixtures::weyl31();
  auto empty = strip_from_columns(d, StripKind::horizontal, {});
  ASSERT_TRUE(empty);
  EXPECT_TRUE(empty->cells.empty());
  EXPECT_FALSE(strip_from_columns(d, StripKind::horizontal, {7}));
}

TEST(Branching, DominanceExamples)
{
  auto one = columns_strip({1}), two = columns_strip({2});
  EXPECT_TRUE(dominance_leq(one, two));
  EXPECT_FALSE(dominance_leq(two, one));
  EXPECT_TRUE(dominance_leq(one, one));
  auto x = columns_strip({1, 3}), y = columns_strip({2, 2});
  EXPECT_FALSE(dominance_leq(x, y));
  EXPECT_FALSE(dominance_leq(y, x));
  Strip v = columns_strip({1});
  v.kind = StripKind::vertical;
  try {
    dominance_leq(one, v);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::KindMismatch);
  }
}

TEST(Branching, LinearExtensionRespectsDominance)
{
  auto d = fixtures::shape({{1, 3}, {1, 2}});
  auto strips = enumerate_strips(d, StripKind::horizontal, plus_letter(1));
  auto order = dominance_linear_extension(strips);
  ASSERT_EQ(order.size(), strips.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      EXPECT_FALSE(dominance_leq(order[j], order[i]) && !dominance_leq(order[i], order[j]));
}

TEST(Branching, WeylShapeCharacterRecombines)
{
  auto a = Alphabet::parse("a+,b+");
  auto rep = branching_check(fixtures::weyl31(), a, a.letter("a+"));
  EXPECT_TRUE(rep.holds_with_factor);
  std::map<std::vector<int>, Integer> expected{{{3, 1}, 1}, {{2, 2}, 1}, {{1, 3}, 1}};
  EXPECT_EQ(rep.lhs.terms(), expected);
  EXPECT_EQ(rep.rhs_with_factor, rep.lhs);
  EXPECT_FALSE(rep.holds_literal);
  for (const auto& s : rep.strips) EXPECT_EQ(s.restriction_failures, 0);
}

TEST(Branching, SingleLetterAlphabet)
{
  auto a = Alphabet::parse("a+");
  auto d = fixtures::shape({{1, 2}, {2, 2}});
  auto rep = branching_check(d, a, a.letter("a+"));
  EXPECT_TRUE(rep.holds_with_factor);
  EXPECT_EQ(rep.lhs.total(), 0);
  auto row = fixtures::shape({{1, 3}});
  auto rep2 = branching_check(row, a, a.letter("a+"));
  EXPECT_TRUE(rep2.holds_with_factor);
  EXPECT_EQ(rep2.lhs.total(), 1);
  EXPECT_THROW(branching_check(row, a, minus_letter(9)), Error);
}

TEST(Branching, FiltrationOfSingleCell)
{
  auto a = Alphabet::parse("a+,b+");
  auto rep = filtration_ranks(fixtures::shape({{1, 1}}), a, a.letter("a+"));
  ASSERT_EQ(rep.steps.size(), 2u);
  for (const auto& s : rep.steps) EXPECT_EQ(s.quotient_rank, 1u);
  EXPECT_EQ(rep.total_straight, 2u);
  EXPECT_TRUE(rep.quotients_match);
  EXPECT_TRUE(rep.telescopes);
}

TEST(Branching, FiltrationOfWeylShape)
{
  auto a = Alphabet::parse("a+,b+");
  auto rep = filtration_ranks(fixtures::weyl31(), a, a.letter("a+"));
  std::size_t sum = 0;
  for (const auto& s : rep.steps) sum += s.quotient_rank;
  EXPECT_EQ(sum, 3u);
  EXPECT_EQ(rep.total_straight, 3u);
  EXPECT_TRUE(rep.quotients_match);
  EXPECT_TRUE(rep.telescopes);
  ASSERT_FALSE(rep.steps.empty());
  EXPECT_EQ(rep.steps.front().filtration_rank, 3u);
}

TEST(Branching, FiltrationWithAbsentLetter)
{
  auto a = Alphabet::parse("b+,c+");
  auto rep = filtration_ranks(fixtures::weyl31(), a, plus_letter(0));
  ASSERT_EQ(rep.steps.size(), 1u);
  EXPECT_TRUE(rep.steps[0].strip.cells.empty());
  EXPECT_TRUE(rep.telescopes);
}
