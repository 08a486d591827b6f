#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "vogel/rational.hpp"

namespace vogel {

/// Rational linear form c0*alpha + c1*beta + c2*gamma in Vogel's parameters.
class LinForm {
 public:
  LinForm() = default;
  LinForm(Rational alpha, Rational beta, Rational gamma);
  static LinForm from_ints(long alpha, long beta, long gamma);

  const Rational& operator[](std::size_t slot) const { return coeffs_[slot]; }
  const std::array<Rational, 3>& coeffs() const { return coeffs_; }

  bool is_zero() const;

  /// Sign-normalized representative: first nonzero coefficient positive.
  /// `sign` is -1 when the coefficients were flipped; since sinh is odd the
  /// caller must fold it into the owning product.
  struct Canonical;
  Canonical canonical() const;
  bool is_canonical() const;

  LinForm operator-() const;
  LinForm operator+(const LinForm& other) const;
  LinForm scaled(const Rational& factor) const;

  /// Human-readable form such as "2α+β-γ"; "0" for the zero form.
  std::string to_string() const;

  friend bool operator==(const LinForm& a, const LinForm& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator<(const LinForm& a, const LinForm& b);

 private:
  std::array<Rational, 3> coeffs_{};
};

struct LinForm::Canonical {
  LinForm form;
  int sign = 1;
};

/// True when a and b are nonzero rational multiples of each other.
bool proportional(const LinForm& a, const LinForm& b);

}  // namespace vogel
