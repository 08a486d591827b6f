#include <gtest/gtest.h>

#include <cmath>

#include "oracle.hpp"
#include "vogel/errors.hpp"
#include "vogel/formulas.hpp"
#include "vogel/laurent.hpp"
#include "vogel/trefoil.hpp"

using namespace vogel;

namespace {

const std::vector<std::array<long, 3>> kGeneric = {{97, -61, 141}, {113, 89, -167}, {-131, 73, 199}};

PPoint to_ppoint(const oracle::Point& p) { return PPoint(p[0], p[1], p[2]); }

Rational classical(const SinhProduct& e, const PPoint& p) { return e.reduced().instantiate(p).classical_limit(); }

void expect_rel(long double a, long double b, long double tol) {
  EXPECT_LE(std::fabs(a - b), tol * std::max<long double>(std::fabs(b), 1e-300L)) << a << " vs " << b;
}

}  // namespace

TEST(Oracle, AdjointReproducesTableOne) {
  for (const auto& row : oracle::table_physical()) {
    EXPECT_EQ(oracle::adjoint_dim(oracle::point(row.a, row.b, row.c)), row.dim) << row.name;
  }
}

TEST(Oracle, ZOneZeroIsAdjoint) {
  for (auto [a, b, c] : kGeneric) {
    auto p = oracle::point(a, b, c);
    EXPECT_EQ(*oracle::classical(oracle::z_factors(1, 0), p), oracle::adjoint_dim(p));
  }
}

TEST(Formulas, AdjointMatchesOracle) {
  for (auto [a, b, c] : kGeneric) {
    auto p = oracle::point(a, b, c);
    EXPECT_EQ(classical(adjoint_qdim(), to_ppoint(p)), oracle::adjoint_dim(p));
    for (double x : {0.2, 0.9}) {
      expect_rel(adjoint_qdim().instantiate(to_ppoint(p)).eval_numeric(x), oracle::adjoint_qdim(oracle::to_double(p), x),
                 1e-9L);
    }
  }
}

TEST(Formulas, ZMatchesDisplayForEveryPermutation) {
  for (auto [a, b, c] : kGeneric) {
    auto p = oracle::point(a, b, c);
    for (const Permutation& sigma : Permutation::all()) {
      auto q = oracle::substitute(sigma.word(), p);
      for (int k = 0; k <= 4; ++k) {
        for (int l = 0; l <= 4; ++l) {
          SinhProduct z = build_Z(k, l, sigma);
          auto expected = oracle::classical(oracle::z_factors(k, l), q);
          ASSERT_TRUE(expected.has_value());
          EXPECT_EQ(classical(z, to_ppoint(p)), *expected) << sigma.word() << " k=" << k << " l=" << l;
          expect_rel(z.instantiate(to_ppoint(p)).eval_numeric(0.37),
                     oracle::quantum(oracle::z_factors(k, l), oracle::to_double(q), 0.37), 1e-9L);
        }
      }
    }
  }
}

TEST(Formulas, XMatchesDisplayForEveryPermutation) {
  for (auto [a, b, c] : kGeneric) {
    auto p = oracle::point(a, b, c);
    for (const Permutation& sigma : Permutation::all()) {
      auto q = oracle::substitute(sigma.word(), p);
      for (int k = 0; k <= 3; ++k) {
        for (int n = 0; n <= 3; ++n) {
          SinhProduct e = build_X(k, n, sigma);
          auto expected = oracle::classical(oracle::x_factors(k, n), q);
          ASSERT_TRUE(expected.has_value());
          EXPECT_EQ(classical(e, to_ppoint(p)), *expected) << sigma.word() << " k=" << k << " n=" << n;
          expect_rel(e.instantiate(to_ppoint(p)).eval_numeric(0.21),
                     oracle::quantum(oracle::x_factors(k, n), oracle::to_double(q), 0.21), 1e-9L);
        }
      }
    }
  }
}

TEST(Formulas, TrivialAndAdjointCorners) {
  for (auto [a, b, c] : kGeneric) {
    PPoint p = PPoint::from_ints(a, b, c);
    EXPECT_EQ(classical(build_Z(0, 0), p), 1);
    EXPECT_EQ(classical(build_X(0, 0), p), 1);
    EXPECT_EQ(classical(build_X(0, 1), p), oracle::adjoint_dim(oracle::point(a, b, c)));
  }
}

TEST(Formulas, YTwoBetaIsZZeroOne) {
  EXPECT_EQ(y2_beta_dim().mode(), Mode::Rational);
  for (auto [a, b, c] : kGeneric) {
    auto p = oracle::point(a, b, c);
    EXPECT_EQ(classical(y2_beta_dim(), to_ppoint(p)), *oracle::classical(oracle::z_factors(0, 1), p));
  }
}

TEST(Formulas, CartanMatchesItsDisplay) {
  for (auto [a, b, c] : kGeneric) {
    auto p = oracle::point(a, b, c);
    EXPECT_EQ(classical(adj2_y2_cartan_dim(), to_ppoint(p)), *oracle::cartan_display(p));
    EXPECT_EQ(*oracle::cartan_display(p), *oracle::classical(oracle::z_factors(2, 1), p));
  }
}

TEST(Formulas, NegativePowersRejected) {
  EXPECT_THROW(build_Z(-1, 0), InvalidFamilyParameter);
  EXPECT_THROW(build_X(0, -1), InvalidFamilyParameter);
}

TEST(Formulas, ZIsBalanced) {
  for (int k = 0; k <= 5; ++k) {
    for (int l = 0; l <= 5; ++l) {
      SinhProduct z = build_Z(k, l);
      auto f = oracle::z_factors(k, l);
      EXPECT_EQ(z.numerator_count(), f.num.size());
      EXPECT_EQ(z.denominator_count(), f.den.size());
    }
  }
}

TEST(Trefoil, CoefficientSumIsOne) {
  long sum = 0;
  for (const Monomial& m : trefoil_monomials()) sum += m.coefficient;
  EXPECT_EQ(sum, 1);
  EXPECT_EQ(trefoil_coefficient_sum(), sum);
}

TEST(Trefoil, SymmetricUnderSlotPermutations) {
  std::map<std::array<int, 3>, long> original;
  for (const Monomial& m : trefoil_monomials()) original[m.exponents] += m.coefficient;
  for (const Permutation& sigma : Permutation::all()) {
    std::map<std::array<int, 3>, long> moved;
    for (const auto& [e, c] : original) moved[sigma.act(e)] += c;
    EXPECT_EQ(moved, original) << sigma.word();
  }
}

TEST(Trefoil, ValueAtOneIsCoefficientSum) {
  for (const auto& row : oracle::table_physical()) {
    PPoint p = PPoint::from_ints(row.a, row.b, row.c);
    EXPECT_EQ(trefoil_eval_exact(p, Rational(1)), trefoil_coefficient_sum());
    EXPECT_EQ(trefoil_laurent(p).coefficient_sum(), trefoil_coefficient_sum());
    EXPECT_NEAR(trefoil_eval(p, 1.0), 1.0, 1e-12);
  }
}

TEST(Trefoil, LaurentMatchesDirectSum) {
  PPoint p = PPoint::from_ints(-2, 2, 3);
  double q = 1.07;
  long double direct = 0;
  for (const Monomial& m : trefoil_monomials()) {
    direct += m.coefficient * std::pow(static_cast<long double>(q), -2 * m.exponents[0] + 2 * m.exponents[1] + 3 * m.exponents[2]);
  }
  EXPECT_NEAR(trefoil_laurent(p).evaluate(2.0 * std::log(q)), static_cast<double>(direct), 1e-9 * std::fabs(direct));
  EXPECT_NEAR(trefoil_eval(p, q), static_cast<double>(direct), 1e-9 * std::fabs(direct));
}

TEST(Trefoil, ExactNeedsIntegerPoint) {
  EXPECT_THROW(trefoil_eval_exact(PPoint(Rational(-2), Rational(1), make_rational(5, 2)), Rational(2)), Error);
}
