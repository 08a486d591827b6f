#include <gtest/gtest.h>

#include <cstdlib>

#include "oracle.hpp"
#include "vogel/catalog.hpp"
#include "vogel/closed_forms.hpp"
#include "vogel/errors.hpp"
#include "vogel/formulas.hpp"
#include "vogel/scanner.hpp"
#include "vogel/serialize.hpp"

using namespace vogel;

namespace {

class Workers {
 public:
  explicit Workers(const char* n) {
    if (const char* old = std::getenv("VOGEL_WORKERS")) saved_ = old;
    setenv("VOGEL_WORKERS", n, 1);
  }
  ~Workers() {
    if (saved_.empty()) {
      unsetenv("VOGEL_WORKERS");
    } else {
      setenv("VOGEL_WORKERS", saved_.c_str(), 1);
    }
  }

 private:
  std::string saved_;
};

}  // namespace

TEST(Scanner, BuildDispatch) {
  auto sigma = Permutation::from_word("cab");
  EXPECT_EQ(build(FormulaKind::Z, 2, 1, sigma).to_string(), build_Z(2, 1, sigma).to_string());
  EXPECT_EQ(build(FormulaKind::X, 1, 2, sigma).to_string(), build_X(1, 2, sigma).to_string());
}

TEST(Scanner, WorkerCountFromEnvironment) {
  Workers w("3");
  EXPECT_EQ(worker_count(), 3u);
}

TEST(Scanner, PropTwoSmallScope) {
  SurveyReport r = survey_prop2(2, 2);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.count(Kind::NotLR), 0u);
  EXPECT_EQ(r.verdicts.size(), 3u * 2u * 6u * 9u);
}

TEST(Scanner, VerdictsAgreeWithOracle) {
  SurveyReport r = survey_prop1(6, 2, 2);
  ASSERT_FALSE(r.verdicts.empty());
  for (const Verdict& v : r.verdicts) {
    oracle::Point p = oracle::named_point(v.point);
    oracle::Zeros z = oracle::zeros(oracle::z_factors(v.k, v.l), oracle::substitute(v.perm, p));
    EXPECT_EQ(v.n, z.n) << v.point << " " << v.perm << " " << v.k << "," << v.l;
    EXPECT_EQ(v.d, z.d) << v.point << " " << v.perm << " " << v.k << "," << v.l;
  }
}

TEST(Scanner, DeterministicAcrossWorkerCounts) {
  nlohmann::json one;
  nlohmann::json many;
  {
    Workers w("1");
    one = to_json(survey_prop1(5, 2, 2));
  }
  {
    Workers w("4");
    many = to_json(survey_prop1(5, 2, 2));
  }
  EXPECT_EQ(one.dump(), many.dump());
  EXPECT_FALSE(one.contains("seconds"));
}

TEST(Scanner, WitnessesReproduceUnderClassify) {
  for (const char* name : {"Y:1", "Y:3", "Y:12"}) {
    CatalogEntry e = lookup(name);
    auto w = find_witness(e, 8, 8);
    ASSERT_TRUE(w.has_value()) << name;
    Classification c = classify(build(w->formula, w->k, w->l, Permutation::from_word(w->perm)), e.coords);
    EXPECT_EQ(c.kind, Kind::NotLR);
    EXPECT_EQ(eval_form(w->form, e.coords), 0);
    oracle::Factors f = w->formula == FormulaKind::Z ? oracle::z_factors(w->k, w->l) : oracle::x_factors(w->k, w->l);
    oracle::Zeros z = oracle::zeros(f, oracle::substitute(w->perm, oracle::named_point(name)));
    EXPECT_GT(z.d, z.n) << name;
  }
}

TEST(Scanner, WitnessBoundsAreMonotone) {
  for (const CatalogEntry& e : enumerate(Region::nonphysical)) {
    auto small = find_witness(e, 3, 3);
    if (!small) continue;
    auto large = find_witness(e, 8, 8);
    ASSERT_TRUE(large.has_value()) << e.name;
    EXPECT_LE(large->k + large->l, small->k + small->l);
  }
}

TEST(Scanner, PropThreeFailsLoudlyOnTightBounds) {
  SurveyReport r = survey_prop3(Prop3Bounds{1, 1, 1, 1});
  EXPECT_FALSE(r.passed());
  bool mentions = false;
  for (const std::string& f : r.failures) mentions = mentions || f.find("witness") != std::string::npos;
  EXPECT_TRUE(mentions);
}

TEST(Scanner, IntegralitySmallScope) {
  SurveyReport r = integrality_survey(2, 2);
  EXPECT_TRUE(r.passed());
  for (const NonInteger& n : r.nonintegers) EXPECT_EQ(n.point, "control");
}

TEST(Scanner, IntegralityAgreesWithOracle) {
  CatalogEntry y2 = lookup("Y:2");
  SurveyReport r = integrality_check({y2}, 3, 3);
  EXPECT_TRUE(r.nonintegers.empty());
  for (const Permutation& sigma : Permutation::all()) {
    for (int k = 0; k <= 3; ++k) {
      for (int l = 0; l <= 3; ++l) {
        auto v = oracle::classical(oracle::z_factors(k, l), oracle::substitute(sigma.word(), oracle::named_point("Y:2")));
        ASSERT_TRUE(v.has_value());
        EXPECT_EQ(v->get_den(), 1);
      }
    }
  }
}

TEST(Scanner, ClosedFormExamples) {
  // B with l=1, k=0: sinh[x/4: (4N)(4N-2)(2N+3)/(2*4*(2N-1))]
  std::string id = case_for(Family::B, 0, 1);
  for (long N = 2; N <= 10; ++N) {
    InstantiatedProduct shown = closed_form(Family::B, id, 0, 1, N).nonzero_part();
    oracle::Factors literal{{{4 * N, 0, 0}, {4 * N - 2, 0, 0}, {2 * N + 3, 0, 0}}, {{2, 0, 0}, {4, 0, 0}, {2 * N - 1, 0, 0}}};
    long double expected = oracle::quantum(literal, {1.0, 0.0, 0.0}, 0.8);
    EXPECT_NEAR(shown.eval_numeric(0.8), static_cast<double>(expected), 1e-9 * std::fabs(static_cast<double>(expected)));
  }
  SurveyReport r = closed_form_crosscheck(10, 0, 1);
  std::size_t seen = 0;
  for (const CrossCheck& c : r.crosschecks) {
    if (c.family != "B" || c.k != 0 || c.l != 1 || c.N < 2) continue;
    EXPECT_EQ(c.outcome, "match") << c.N;
    ++seen;
  }
  EXPECT_EQ(seen, 9u);
  EXPECT_THROW(closed_form(Family::A, "A1", 2, 0, 3), OutOfCaseRange);
}

TEST(Scanner, ClosedFormCrosscheckSmall) {
  SurveyReport r = closed_form_crosscheck(6, 2, 2);
  EXPECT_TRUE(r.passed());
  std::size_t matches = 0;
  for (const CrossCheck& c : r.crosschecks) matches += c.outcome == "match";
  EXPECT_GT(matches, 0u);
}

TEST(Scanner, TextReport) {
  SurveyReport r = survey_prop2(1, 1);
  std::string text = to_text(r);
  EXPECT_NE(text.find("prop2: passed"), std::string::npos);
  EXPECT_NE(text.find("NotLR=0"), std::string::npos);
}
