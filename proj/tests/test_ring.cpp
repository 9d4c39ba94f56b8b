#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace rowconvex;

namespace {

Polynomial rebuild(const SubductionResult& r)
{
  Polynomial p;
  for (const auto& term : r.expression) p.add_scaled(product_polynomial(term.factors), term.coefficient);
  return p;
}

} // namespace

TEST(Ring, InterleaveStacksRows)
{
  auto a = Alphabet::parse("a+,b+");
  auto d = fixtures::weyl31();
  auto x = fixtures::tableau(d, a, {{"a+", "a+", "a+"}, {"b+"}});
  auto y = fixtures::tableau(d, a, {{"a+", "b+", "b+"}, {"b+"}});
  auto t = interleave(x, y);
  EXPECT_EQ(t.shape, power_shape(d, 2));
  EXPECT_EQ(t.rows[0], x.rows[0]);
  EXPECT_EQ(t.rows[1], y.rows[0]);
  EXPECT_EQ(t.rows[2], x.rows[1]);
  EXPECT_EQ(t.rows[3], y.rows[1]);
  auto back = split_interleaved(t, 2);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[0], x);
  EXPECT_EQ(back[1], y);
  auto other = fixtures::tableau(fixtures::shape({{1, 2}}), a, {{"a+", "b+"}});
  EXPECT_THROW(interleave(x, other), Error);
}

TEST(Ring, RelationsVanishAndMatchNonStraightInterleaves)
{
  for (const auto& spec : {"a-,b-", "a+,b+", "a+,b-"}) {
    auto a = Alphabet::parse(spec);
    for (const auto& d : enumerate_shapes(3)) {
      auto straight = enumerate_straight(d, a);
      for (const auto& x : straight)
        for (const auto& y : straight) {
          auto rels = relations_for_pair(x, y);
          for (const auto& r : rels) EXPECT_TRUE(r.image().is_zero());
          EXPECT_EQ(rels.empty(), is_straight(interleave(x, y)).straight) << describe(x, &a) << " * " << describe(y, &a);
        }
    }
  }
}

TEST(Ring, FullFamilyContainsDefaultRelations)
{
  auto a = Alphabet::parse("a-,b-,c-");
  auto d = fixtures::shape({{1, 2}, {1, 1}});
  RelationOptions full;
  full.full_family = true;
  auto base = groebner_relations_deg2(d, a);
  auto wide = groebner_relations_deg2(d, a, full);
  EXPECT_GE(wide.size(), base.size());
  for (const auto& r : wide) EXPECT_TRUE(r.image().is_zero());
}

TEST(Ring, SubductionExpressesProducts)
{
  auto a = Alphabet::parse("a+,b-");
  auto d = fixtures::shape({{1, 2}, {2, 2}});
  auto straight = enumerate_straight(d, a);
  ASSERT_FALSE(straight.empty());
  for (const auto& x : straight)
    for (const auto& y : straight) {
      Polynomial p = product_polynomial({x, y});
      if (p.is_zero()) continue;
      for (auto basis : {SubductionBasis::straight, SubductionBasis::row_standard}) {
        auto r = sagbi_subduct(p, d, a, basis);
        EXPECT_TRUE(r.member) << describe(x, &a) << " * " << describe(y, &a);
        EXPECT_EQ(rebuild(r), p);
      }
    }
}

TEST(Ring, SubductionOfSums)
{
  auto a = Alphabet::parse("a-,b-,c-");
  auto d = fixtures::shape({{1, 2}});
  auto s = enumerate_straight(d, a);
  ASSERT_GE(s.size(), 2u);
  Polynomial p = tableau_to_polynomial(s[0]) * Rational(2) - tableau_to_polynomial(s[1]);
  auto r = sagbi_subduct(p, d, a);
  EXPECT_TRUE(r.member);
  EXPECT_EQ(rebuild(r), p);
  EXPECT_TRUE(sagbi_subduct(Polynomial{}, d, a).member);
}

TEST(Ring, SubductionRejectsNonMembers)
{
  auto a = Alphabet::parse("a+");
  auto A = a.letter("a+");
  auto d = fixtures::shape({{1, 2}});
  Polynomial x = Polynomial::variable(Var{A, minus_letter(1)});
  auto r = sagbi_subduct(x, d, a);
  EXPECT_FALSE(r.member);
  EXPECT_EQ(r.remainder, x);

  // (a|1)(a|1) has the right degree but is not in the algebra
  auto m = Alphabet::parse("a-");
  Polynomial sq = Polynomial::variable(Var{m.letter("a-"), minus_letter(1)});
  sq = sq * sq;
  EXPECT_FALSE(sagbi_subduct(sq, d, m).member);
}

TEST(Ring, SubductionNeedsHomogeneousInput)
{
  auto a = Alphabet::parse("a-");
  auto A = a.letter("a-");
  Polynomial x = Polynomial::variable(Var{A, minus_letter(1)});
  try {
    sagbi_subduct(x + x * Polynomial::variable(Var{A, minus_letter(2)}), fixtures::shape({{1, 1}}), a);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotHomogeneous);
  }
}
