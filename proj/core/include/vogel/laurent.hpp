#pragma once

#include <map>
#include <string>
#include <variant>

#include "vogel/rational.hpp"
#include "vogel/sinh_product.hpp"

namespace vogel {

/// Finite Laurent polynomial in q^(1/g). Exponents are stored as integer
/// numerators over the granularity g; zero coefficients are never stored
/// and g is kept minimal.
class LaurentPoly {
 public:
  using Terms = std::map<long, BigInt>;

  LaurentPoly() = default;
  static LaurentPoly constant(const BigInt& value);
  /// Builds from exponent (in powers of q) -> coefficient.
  static LaurentPoly from_exponents(const std::map<Rational, BigInt>& terms);

  long granularity() const { return granularity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  BigInt coefficient_sum() const;
  /// Value at q = e^(x/2).
  double evaluate(double x) const;

  /// Descending exponents, e.g. "q^2 + 1 + q^-2" or "2*q^(3/2) - q^(1/2)".
  std::string to_string() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.granularity_ == b.granularity_ && a.terms_ == b.terms_;
  }

 private:
  long granularity_ = 1;
  Terms terms_;
};

/// Why an instantiated product is not a Laurent polynomial in q.
struct NonDivisibility {
  std::string reason;
  /// Denominator value whose cyclotomic-type factor failed to divide, or 0
  /// when the failure is a non-integral coefficient.
  Rational failed_factor;
};

using LaurentResult = std::variant<LaurentPoly, NonDivisibility>;

/// Exact expansion of an instantiated product in q = e^(x/2).
/// Throws SingularAtPoint when a denominator value is zero.
LaurentResult laurent_expand(const InstantiatedProduct& e);

}  // namespace vogel
