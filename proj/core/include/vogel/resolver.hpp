#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vogel/projective.hpp"
#include "vogel/sinh_product.hpp"

namespace vogel {

enum class Kind { Regular, RegularZero, LinearlyResolvable, NotLR };

std::string_view kind_string(Kind kind);

struct Classification {
  Kind kind = Kind::Regular;
  /// Vanishing factors after cancellation, with multiplicity.
  int n = 0;
  int d = 0;
  /// Vanishing factors before cancellation.
  int raw_n = 0;
  int raw_d = 0;
  /// Vanishing denominator forms, filled when kind is NotLR.
  std::vector<LinForm> witnesses;
};

/// Counts vanishing factors of the reduced expression at p.
/// Throws UndefinedExpression if the zero form sits in a denominator.
Classification classify(const SinhProduct& e, const PPoint& p);

/// Lowest-order behaviour of e(p + t v) as t -> 0:
/// t^order * (x/4)^order * prefactor * residual(x), times the numerator
/// factors in `line_factors`, which vanish along the whole line and are
/// left out of order and prefactor.
struct LeadingTerm {
  int order = 0;
  Rational prefactor = 1;
  InstantiatedProduct residual;
  std::vector<LinForm> line_factors;
};

/// Throws IrregularLine when a vanishing denominator form also vanishes on v.
LeadingTerm leading_term(const SinhProduct& e, const PPoint& p, const Vec3& v);

struct ResolvedLimit {
  Rational prefactor = 0;
  InstantiatedProduct residual;
  bool identically_zero = false;
  PLine line = PLine(LinForm::from_ints(1, 0, 0));
  Vec3 direction;

  Rational classical_value() const;
  /// Resolved value at x; Rational-mode residuals ignore x.
  double quantum_value(double x) const;
};

/// Limit of e approaching p along `line`.
/// Throws NotOnLine, NotResolvable (d > n) or IrregularLine.
ResolvedLimit resolve_along(const SinhProduct& e, const PPoint& p, const PLine& line);
/// Same with an explicit direction v (which must satisfy line.form(v) = 0).
ResolvedLimit resolve_along(const SinhProduct& e, const PPoint& p, const PLine& line, const Vec3& v);

/// Independent oracle: evaluates e at p + t v for t = 1e-3, 1e-4, 1e-5 in
/// 100-digit arithmetic and Richardson-extrapolates to t = 0.
double numeric_limit_check(const SinhProduct& e, const PPoint& p, const PLine& line, double x);

/// Least-squares slope of log|e(p + t v)| against log t for
/// t = 1e-3 .. 1e-6 at fixed x.
double log_slope(const SinhProduct& e, const PPoint& p, const Vec3& v, double x);

}  // namespace vogel
