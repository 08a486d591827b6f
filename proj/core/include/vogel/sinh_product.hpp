#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "vogel/linform.hpp"
#include "vogel/permutation.hpp"
#include "vogel/projective.hpp"
#include "vogel/rational.hpp"

namespace vogel {

/// Quantum: factors are sinh(L*x/4). Rational: factors are the plain values L.
enum class Mode { Quantum, Rational };

class InstantiatedProduct;

/// sign * scale * prod sinh(L_i x/4) / prod sinh(M_j x/4) over LinForm
/// multisets. Stored forms are always sign-canonical.
class SinhProduct {
 public:
  using Factors = std::map<LinForm, int>;

  explicit SinhProduct(Mode mode = Mode::Quantum) : mode_(mode) {}

  void mul_numerator(const LinForm& form, int multiplicity = 1);
  void mul_denominator(const LinForm& form, int multiplicity = 1);
  void negate() { sign_ = -sign_; }
  void set_scale(Rational scale) { scale_ = std::move(scale); }

  Mode mode() const { return mode_; }
  SinhProduct with_mode(Mode mode) const;
  int sign() const { return sign_; }
  const Rational& scale() const { return scale_; }
  const Factors& numerator() const { return num_; }
  const Factors& denominator() const { return den_; }

  std::size_t numerator_count() const;
  std::size_t denominator_count() const;
  bool balanced() const { return numerator_count() == denominator_count(); }
  bool has_zero_form_in_denominator() const;

  /// Cancels identical nonzero forms between numerator and denominator.
  SinhProduct reduced() const;
  SinhProduct permuted(const Permutation& sigma) const;

  InstantiatedProduct instantiate(const Vec3& point) const;
  InstantiatedProduct instantiate(const PPoint& point) const;

  std::string to_string() const;

 private:
  Mode mode_;
  int sign_ = 1;
  Rational scale_ = 1;
  Factors num_;
  Factors den_;
};

/// Same shape with every form replaced by its value at a point. Values are
/// stored nonnegative; zeros are kept.
class InstantiatedProduct {
 public:
  using Factors = std::map<Rational, int>;

  explicit InstantiatedProduct(Mode mode = Mode::Quantum) : mode_(mode) {}

  void mul_numerator(const Rational& value, int multiplicity = 1);
  void mul_denominator(const Rational& value, int multiplicity = 1);
  void negate() { sign_ = -sign_; }
  void mul_scale(const Rational& factor) { scale_ *= factor; }

  Mode mode() const { return mode_; }
  int sign() const { return sign_; }
  const Rational& scale() const { return scale_; }
  const Factors& numerator() const { return num_; }
  const Factors& denominator() const { return den_; }

  std::size_t numerator_count() const;
  std::size_t denominator_count() const;
  int zero_numerator_count() const;
  int zero_denominator_count() const;
  bool is_constant() const { return num_.empty() && den_.empty(); }

  InstantiatedProduct reduced() const;

  /// x -> 0 value. Zero numerator factor gives 0; a zero denominator factor
  /// throws SingularAtPoint.
  Rational classical_limit() const;

  /// Floating value at x; Rational mode ignores x. Switches to 100-digit
  /// arithmetic when a sinh argument or the total exponent would overflow
  /// a double.
  double eval_numeric(double x) const;

  /// "-sinh(6x/4)/sinh(2x/4)", or "-6/2" in Rational mode.
  std::string to_string() const;

 private:
  Mode mode_;
  int sign_ = 1;
  Rational scale_ = 1;
  Factors num_;
  Factors den_;
};

}  // namespace vogel
