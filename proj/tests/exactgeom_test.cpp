#include <gtest/gtest.h>

#include <set>

#include "vogel/errors.hpp"
#include "vogel/linform.hpp"
#include "vogel/permutation.hpp"
#include "vogel/projective.hpp"
#include "vogel/rational.hpp"

using namespace vogel;

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("7"), 7);
  EXPECT_EQ(parse_rational("-10/4"), make_rational(-5, 2));
  EXPECT_EQ(to_string(parse_rational("-10/4")), "-5/2");
  EXPECT_EQ(to_string(make_rational(6, 3)), "2");
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational(" 1"), ParseError);
  EXPECT_THROW(parse_rational("x"), ParseError);
}

TEST(Rational, Helpers) {
  EXPECT_TRUE(is_integer(make_rational(8, 4)));
  EXPECT_FALSE(is_integer(make_rational(1, 3)));
  EXPECT_EQ(sign_of(make_rational(-1, 9)), -1);
  EXPECT_EQ(sign_of(Rational(0)), 0);
  EXPECT_EQ(lcm(BigInt(4), BigInt(6)), 12);
}

TEST(LinForm, CanonicalFlipsLeadingSign) {
  auto c = LinForm::from_ints(0, -2, 3).canonical();
  EXPECT_EQ(c.form, LinForm::from_ints(0, 2, -3));
  EXPECT_EQ(c.sign, -1);
  auto d = LinForm::from_ints(1, -2, 3).canonical();
  EXPECT_EQ(d.form, LinForm::from_ints(1, -2, 3));
  EXPECT_EQ(d.sign, 1);
  EXPECT_TRUE(LinForm().is_zero());
  EXPECT_EQ(LinForm().canonical().sign, 1);
}

TEST(LinForm, Printing) {
  EXPECT_EQ(LinForm::from_ints(2, 1, -1).to_string(), "2α+β-γ");
  EXPECT_EQ(LinForm::from_ints(0, 0, 0).to_string(), "0");
  EXPECT_EQ(LinForm::from_ints(-1, 0, 3).to_string(), "-α+3γ");
  EXPECT_EQ(LinForm(make_rational(2, 3), 0, 0).to_string(), "(2/3)α");
}

TEST(LinForm, Proportional) {
  EXPECT_TRUE(proportional(LinForm::from_ints(1, 2, 0), LinForm::from_ints(-2, -4, 0)));
  EXPECT_FALSE(proportional(LinForm::from_ints(1, 2, 0), LinForm::from_ints(1, 2, 1)));
}

TEST(Permutation, WordsRoundTrip) {
  std::set<std::string> words;
  for (const Permutation& s : Permutation::all()) words.insert(s.word());
  EXPECT_EQ(words, (std::set<std::string>{"abc", "acb", "bac", "bca", "cab", "cba"}));
  EXPECT_EQ(Permutation::all().front().word(), "abc");
  EXPECT_THROW(Permutation::from_word("abd"), ParseError);
  EXPECT_THROW(Permutation::from_word("aab"), ParseError);
}

TEST(Permutation, GroupLaws) {
  for (const Permutation& s : Permutation::all()) {
    EXPECT_TRUE(s.compose(s.inverse()).is_identity());
    for (const Permutation& t : Permutation::all()) {
      std::array<int, 3> x{7, 11, 13};
      EXPECT_EQ(s.compose(t).act(x), s.act(t.act(x)));
    }
  }
}

TEST(Permutation, ApplyMatchesPullback) {
  LinForm f = LinForm::from_ints(3, -1, 2);
  Vec3 x{Rational(5), Rational(-7), make_rational(1, 2)};
  for (const Permutation& s : Permutation::all()) {
    EXPECT_EQ(eval_form(s.apply(f), x), eval_form(f, s.pullback(x)));
  }
}

TEST(Permutation, WordReadsSlots) {
  // "bca" puts (beta, gamma, alpha) into the slots.
  auto s = Permutation::from_word("bca");
  std::array<int, 3> p{6, 4, 5};
  EXPECT_EQ(s.pullback(p), (std::array<int, 3>{4, 5, 6}));
}

TEST(PPoint, ProjectiveEquality) {
  EXPECT_EQ(PPoint::from_ints(-2, 4, 4), PPoint::from_ints(1, -2, -2));
  EXPECT_FALSE(PPoint::from_ints(-2, 4, 4) == PPoint::from_ints(-2, 4, 5));
  EXPECT_THROW(PPoint::from_ints(0, 0, 0), Error);
  EXPECT_EQ(PPoint::parse("-2,4,-2/3"), PPoint(Rational(-2), Rational(4), make_rational(-2, 3)));
  EXPECT_THROW(PPoint::parse("1,2"), ParseError);
  EXPECT_EQ(PPoint::from_ints(1, 2, 3).t(), 6);
}

TEST(PPoint, Printing) {
  EXPECT_EQ(PPoint::from_ints(-6, -10, 1).to_string(), "(-6,-10,1)");
}

TEST(Geometry, CrossIsOrthogonal) {
  Vec3 a{Rational(1), Rational(2), Rational(3)};
  Vec3 b{Rational(-4), Rational(0), make_rational(1, 2)};
  Vec3 c = cross(a, b);
  EXPECT_EQ(c[0] * a[0] + c[1] * a[1] + c[2] * a[2], 0);
  EXPECT_EQ(c[0] * b[0] + c[1] * b[1] + c[2] * b[2], 0);
  EXPECT_TRUE(is_zero(cross(a, a)));
}

TEST(Lines, NamedForms) {
  EXPECT_EQ(PLine::named(LineName::sl).form(), LinForm::from_ints(1, 1, 0));
  EXPECT_EQ(PLine::named(LineName::so).form(), LinForm::from_ints(2, 1, 0));
  EXPECT_EQ(PLine::named(LineName::sp).form(), LinForm::from_ints(1, 2, 0));
  EXPECT_EQ(PLine::named(LineName::exc).form(), LinForm::from_ints(2, 2, -1));
  EXPECT_EQ(PLine::named(LineName::so, Permutation::from_word("cba")).label(), "so:cba");
  EXPECT_EQ(PLine::named(LineName::exc).label(), "exc");
  EXPECT_FALSE(parse_line_name("su").has_value());
}

TEST(Lines, ClassicalSeriesLieOnTheirLines) {
  for (long N = 2; N <= 12; ++N) {
    EXPECT_TRUE(PLine::named(LineName::sl).contains(PPoint::from_ints(-2, 2, N)));
    EXPECT_TRUE(PLine::named(LineName::so).contains(PPoint::from_ints(-2, 4, N - 4)));
    EXPECT_TRUE(PLine::named(LineName::sp).contains(PPoint(Rational(-2), Rational(1), make_rational(N, 2) + 2)));
  }
  EXPECT_TRUE(PLine::named(LineName::exc).contains(PPoint::from_ints(-2, 4, 4)));
}

TEST(Lines, DirectionStaysOnLine) {
  PLine so = PLine::named(LineName::so);
  PPoint p = PPoint::from_ints(-2, 4, 4);
  Vec3 v = line_direction(so, p);
  EXPECT_EQ(eval_form(so.form(), v), 0);
  EXPECT_FALSE(proportional(v, p.coords()));
  EXPECT_THROW(line_direction(PLine::named(LineName::sl), p), NotOnLine);
}
