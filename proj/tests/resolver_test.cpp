#include <gtest/gtest.h>

#include <cmath>
#include <functional>

#include "oracle.hpp"
#include "vogel/errors.hpp"
#include "vogel/formulas.hpp"
#include "vogel/resolver.hpp"

using namespace vogel;

namespace {

Vec3 vec(long a, long b, long c) { return {Rational(a), Rational(b), Rational(c)}; }

oracle::Point opoint(const Vec3& v) { return {v[0], v[1], v[2]}; }

PLine line_through(const PPoint& p, const Vec3& v) {
  Vec3 n = cross(p.coords(), v);
  return PLine(LinForm(n[0], n[1], n[2]));
}

// Exact value at p + t v for t = 10^-40.
Rational tiny_step(const std::function<std::optional<oracle::Q>(const oracle::Point&)>& f, const PPoint& p,
                   const Vec3& v) {
  oracle::Q t(1);
  for (int i = 0; i < 40; ++i) t /= 10;
  auto value = f(oracle::along(opoint(p.coords()), t, opoint(v)));
  EXPECT_TRUE(value.has_value());
  return value.value_or(0);
}

void expect_within(const Rational& exact, const Rational& approx, double tol) {
  Rational diff = exact - approx;
  EXPECT_LT(std::fabs(diff.get_d()), tol) << to_string(exact) << " vs " << approx.get_d();
}

std::optional<oracle::Q> y2_oracle(const oracle::Point& p) { return oracle::classical(oracle::z_factors(0, 1), p); }

struct Golden {
  const char* label;
  SinhProduct e;
  PPoint p;
  Vec3 v;
  long expected;
};

std::vector<Golden> golden() {
  return {
      {"y2 sl2 sl", y2_beta_dim(), PPoint::from_ints(-2, 2, 2), vec(0, 0, 1), -3},
      {"y2 so8 so", y2_beta_dim(), PPoint::from_ints(-2, 4, 4), vec(-1, 2, 0), 70},
      {"y2 so8 exc", y2_beta_dim(), PPoint::from_ints(-2, 4, 4), vec(-2, 2, 0), 105},
      {"cartan so8 so", adj2_y2_cartan_dim(), PPoint::from_ints(4, 4, -2), vec(0, -2, 1), -35},
      {"cartan so8 exc", adj2_y2_cartan_dim(), PPoint::from_ints(4, 4, -2), vec(0, -1, 1), -105},
  };
}

}  // namespace

TEST(Classify, Kinds) {
  EXPECT_EQ(classify(adjoint_qdim(), PPoint::from_ints(-6, -10, 1)).kind, Kind::Regular);
  Classification sl2 = classify(y2_beta_dim(), PPoint::from_ints(-2, 2, 2));
  EXPECT_EQ(sl2.kind, Kind::LinearlyResolvable);
  EXPECT_EQ(sl2.n, sl2.d);
  EXPECT_GT(sl2.d, 0);
}

TEST(Classify, AgreesWithOracleZeroCounts) {
  for (const char* name : {"Y:3", "Y:1", "E8", "sl:2", "so:8"}) {
    oracle::Point p = oracle::named_point(name);
    PPoint pp(p[0], p[1], p[2]);
    for (const Permutation& sigma : Permutation::all()) {
      for (int k = 0; k <= 4; ++k) {
        for (int l = 0; l <= 4; ++l) {
          Classification c = classify(build_Z(k, l, sigma), pp);
          oracle::Zeros z = oracle::zeros(oracle::z_factors(k, l), oracle::substitute(sigma.word(), p));
          EXPECT_EQ(c.n, z.n) << name << " " << sigma.word() << " " << k << "," << l;
          EXPECT_EQ(c.d, z.d) << name << " " << sigma.word() << " " << k << "," << l;
        }
      }
    }
  }
}

TEST(Classify, YThreeWitness) {
  PPoint y3 = PPoint::from_ints(6, 4, 5);
  Classification c = classify(build_Z(4, 1, Permutation::from_word("bca")), y3);
  EXPECT_EQ(c.kind, Kind::NotLR);
  ASSERT_FALSE(c.witnesses.empty());
  bool found = false;
  for (const LinForm& w : c.witnesses) {
    EXPECT_EQ(eval_form(w, y3), 0);
    found = found || proportional(w, LinForm::from_ints(2, -3, 0));
  }
  EXPECT_TRUE(found);
  // In the substituted slots (4,5,6) the factor is alpha(3-6)+2gamma.
  auto q = oracle::substitute("bca", oracle::point(6, 4, 5));
  EXPECT_EQ(q, oracle::point(4, 5, 6));
  auto f = oracle::z_factors(4, 1);
  bool listed = false;
  for (const oracle::Triple& t : f.den) listed = listed || (t.a == -3 && t.b == 0 && t.c == 2);
  EXPECT_TRUE(listed);
  EXPECT_EQ(oracle::value({-3, 0, 2}, q), 0);
  EXPECT_THROW(resolve_along(build_Z(4, 1, Permutation::from_word("bca")), y3, PLine(LinForm::from_ints(0, 5, -4))),
               NotResolvable);
}

TEST(Resolve, GoldenSetMatchesTinyStepOracle) {
  for (const Golden& g : golden()) {
    PLine line = line_through(g.p, g.v);
    ResolvedLimit r = resolve_along(g.e, g.p, line, g.v);
    EXPECT_EQ(r.classical_value(), g.expected) << g.label;
    bool cartan = std::string(g.label).rfind("cartan", 0) == 0;
    std::function<std::optional<oracle::Q>(const oracle::Point&)> f = y2_oracle;
    if (cartan) f = oracle::cartan_display;
    expect_within(r.classical_value(), tiny_step(f, g.p, g.v), 1e-20);
  }
}

TEST(Resolve, NamedLines) {
  PPoint so8 = PPoint::from_ints(-2, 4, 4);
  EXPECT_EQ(resolve_along(y2_beta_dim(), so8, PLine::named(LineName::so)).classical_value(), 70);
  EXPECT_EQ(resolve_along(y2_beta_dim(), so8, PLine::named(LineName::exc)).classical_value(), 105);
  EXPECT_EQ(resolve_along(y2_beta_dim(), PPoint::from_ints(-2, 2, 2), PLine::named(LineName::sl)).classical_value(), -3);
  EXPECT_THROW(resolve_along(y2_beta_dim(), so8, PLine::named(LineName::sl)), NotOnLine);
}

TEST(Resolve, GaugeInvariance) {
  for (const Golden& g : golden()) {
    PLine line = line_through(g.p, g.v);
    Rational base = resolve_along(g.e, g.p, line, g.v).classical_value();
    for (const Rational& lambda : {Rational(3), Rational(-1), make_rational(2, 7)}) {
      Vec3 scaled{lambda * g.v[0], lambda * g.v[1], lambda * g.v[2]};
      EXPECT_EQ(resolve_along(g.e, g.p, line, scaled).classical_value(), base) << g.label;
      Vec3 moved = shifted(g.v, lambda, g.p.coords());
      EXPECT_EQ(resolve_along(g.e, g.p, line, moved).classical_value(), base) << g.label;
      EXPECT_EQ(resolve_along(g.e, g.p.scaled(lambda), line, g.v).classical_value(), base) << g.label;
    }
  }
}

TEST(Resolve, QuantumResidualOnSlTwo) {
  SinhProduct q = y2_beta_dim().with_mode(Mode::Quantum);
  PPoint sl2 = PPoint::from_ints(-2, 2, 2);
  ResolvedLimit r = resolve_along(q, sl2, PLine::named(LineName::sl));
  for (double x : {0.3, 0.9}) {
    double expected = -std::sinh(1.5 * x) / std::sinh(0.5 * x);
    EXPECT_NEAR(r.quantum_value(x), expected, 1e-9 * std::fabs(expected));
    EXPECT_NEAR(numeric_limit_check(q, sl2, PLine::named(LineName::sl), x), expected, 1e-6 * std::fabs(expected));
  }
}

TEST(Resolve, IrregularLine) {
  PPoint sl2 = PPoint::from_ints(-2, 2, 2);
  SinhProduct e = y2_beta_dim().reduced();
  std::optional<LinForm> vanishing;
  for (const auto& [form, mult] : e.denominator()) {
    if (eval_form(form, sl2) == 0) vanishing = form;
  }
  ASSERT_TRUE(vanishing.has_value());
  EXPECT_THROW(resolve_along(e, sl2, PLine(*vanishing)), IrregularLine);
}

TEST(Resolve, LogSlopeMatchesOrder) {
  PPoint p = PPoint::from_ints(-2, 4, 4);
  Vec3 v{make_rational(1, 3), make_rational(2, 7), make_rational(-5, 11)};
  for (const Permutation& sigma : Permutation::all()) {
    for (int k = 0; k <= 3; ++k) {
      for (int l = 0; l <= 3; ++l) {
        SinhProduct z = build_Z(k, l, sigma);
        Classification c = classify(z, p);
        if (c.kind != Kind::LinearlyResolvable && c.kind != Kind::RegularZero) continue;
        LeadingTerm lead = leading_term(z, p, v);
        EXPECT_EQ(lead.order, c.n - c.d);
        EXPECT_NEAR(log_slope(z, p, v, 0.6), c.n - c.d, 0.05) << sigma.word() << " " << k << "," << l;
      }
    }
  }
}

TEST(Classify, SoThreeIsOutsideTheSweep) {
  // so_3 read off the so line is not the sl2 point, and is genuinely NotLR here.
  PPoint so3 = PPoint::from_ints(-2, 4, -1);
  EXPECT_NE(so3, PPoint::from_ints(-2, 2, 2));
  Classification c = classify(build_Z(0, 5, Permutation::from_word("cab")), so3);
  EXPECT_EQ(c.kind, Kind::NotLR);
  oracle::Zeros z = oracle::zeros(oracle::z_factors(0, 5), oracle::substitute("cab", oracle::point(-2, 4, -1)));
  EXPECT_EQ(c.n, z.n);
  EXPECT_EQ(c.d, z.d);
  EXPECT_GT(z.d, z.n);
}
