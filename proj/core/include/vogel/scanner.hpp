#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "vogel/catalog.hpp"
#include "vogel/closed_forms.hpp"
#include "vogel/resolver.hpp"

namespace vogel {

enum class FormulaKind { Z, X };

std::string_view formula_string(FormulaKind kind);
SinhProduct build(FormulaKind kind, int k, int l, const Permutation& sigma);

struct Verdict {
  std::string point;
  FormulaKind formula = FormulaKind::Z;
  std::string perm;
  int k = 0;
  int l = 0;
  Kind kind = Kind::Regular;
  int n = 0;
  int d = 0;
};

struct WitnessRecord {
  std::string point;
  FormulaKind formula = FormulaKind::Z;
  std::string perm;
  int k = 0;
  int l = 0;
  /// Vanishing denominator form of build(formula, k, l, perm).
  LinForm form;
};

struct NonInteger {
  std::string point;
  FormulaKind formula = FormulaKind::Z;
  std::string perm;
  int k = 0;
  int l = 0;
  Rational value;
};

/// Closed form against the general formula on one (case, k, l, N).
struct CrossCheck {
  std::string family;
  std::string case_id;
  int k = 0;
  int l = 0;
  long N = 0;
  /// match, sign, value, order, order_only, display_singular, line_factors
  std::string outcome;
  Kind general_kind = Kind::Regular;
  int general_order = 0;
  int display_order = 0;
  /// Numerator factors of the general formula vanishing on the whole line.
  int line_factors = 0;
  /// Values at the first sample x (empty when not compared).
  std::optional<double> general_value;
  std::optional<double> closed_value;
  /// Another case's display that matches here, when this one does not.
  std::string reading;
};

struct SurveyReport {
  std::string name;
  nlohmann::json scope;
  std::vector<Verdict> verdicts;
  std::vector<WitnessRecord> witnesses;
  std::vector<NonInteger> nonintegers;
  std::vector<CrossCheck> crosschecks;
  /// Survey expectations that did not hold.
  std::vector<std::string> failures;
  /// Informational findings (typo log, unfound witnesses are failures).
  std::vector<std::string> notes;
  double seconds = 0.0;

  bool passed() const { return failures.empty(); }
  std::size_t count(Kind kind) const;
};

/// Z over sl_N (2..Nmax), so_N (5..Nmax), sp_N (even, 2..2*Nmax) and the
/// six exceptional points, every permutation, 0 <= k <= kmax, 0 <= l <= lmax.
SurveyReport survey_prop1(long Nmax, int kmax, int lmax);

/// Z and X at E7.5, X1, X2.
SurveyReport survey_prop2(int kmax, int lmax);

/// Y:2, Y:6, Y:32 must be regular for k,l <= regular bounds; every other
/// Y entry needs a NotLR witness with k,l <= witness bounds.
struct Prop3Bounds {
  int regular_kmax = 6;
  int regular_lmax = 6;
  int witness_kmax = 8;
  int witness_lmax = 8;
};
SurveyReport survey_prop3(const Prop3Bounds& bounds);

/// First NotLR witness at p, scanning k+l, then k, then Z before X, then
/// permutation order.
std::optional<WitnessRecord> find_witness(const CatalogEntry& entry, int kmax, int lmax);

/// Exact classical limits of Z and X at the given points; every
/// non-integer is listed. Singular cases are skipped with a note.
SurveyReport integrality_check(const std::vector<CatalogEntry>& points, int kmax, int lmax);

/// Y:2 and Y:32 must give only integers; the control point (1,2,9) must
/// give at least one non-integer.
SurveyReport integrality_survey(int kmax, int lmax);

/// Every closed-form case with k,l <= bounds and min rank <= N <= Nmax.
SurveyReport closed_form_crosscheck(long Nmax, int kmax, int lmax);

/// Worker count from VOGEL_WORKERS, else the hardware concurrency.
unsigned worker_count();

}  // namespace vogel
