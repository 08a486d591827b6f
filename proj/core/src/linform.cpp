#include "vogel/linform.hpp"

#include <utility>

namespace vogel {

LinForm::LinForm(Rational alpha, Rational beta, Rational gamma)
    : coeffs_{std::move(alpha), std::move(beta), std::move(gamma)} {}

LinForm LinForm::from_ints(long alpha, long beta, long gamma) {
  return LinForm(Rational(alpha), Rational(beta), Rational(gamma));
}

bool LinForm::is_zero() const {
  return coeffs_[0] == 0 && coeffs_[1] == 0 && coeffs_[2] == 0;
}

LinForm::Canonical LinForm::canonical() const {
  for (const auto& c : coeffs_) {
    if (c == 0) continue;
    if (c > 0) return {*this, 1};
    return {-*this, -1};
  }
  return {*this, 1};
}

bool LinForm::is_canonical() const { return canonical().sign == 1; }

LinForm LinForm::operator-() const {
  return LinForm(-coeffs_[0], -coeffs_[1], -coeffs_[2]);
}

LinForm LinForm::operator+(const LinForm& other) const {
  return LinForm(coeffs_[0] + other.coeffs_[0], coeffs_[1] + other.coeffs_[1],
                 coeffs_[2] + other.coeffs_[2]);
}

LinForm LinForm::scaled(const Rational& factor) const {
  return LinForm(coeffs_[0] * factor, coeffs_[1] * factor, coeffs_[2] * factor);
}

std::string LinForm::to_string() const {
  static constexpr const char* kSymbols[3] = {"α", "β", "γ"};
  std::string out;
  for (std::size_t i = 0; i < 3; ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational magnitude = abs(c);
    if (c < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    if (magnitude != 1) {
      if (is_integer(magnitude)) {
        out += vogel::to_string(magnitude);
      } else {
        out += "(" + vogel::to_string(magnitude) + ")";
      }
    }
    out += kSymbols[i];
  }
  return out.empty() ? "0" : out;
}

bool operator<(const LinForm& a, const LinForm& b) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (a.coeffs_[i] < b.coeffs_[i]) return true;
    if (b.coeffs_[i] < a.coeffs_[i]) return false;
  }
  return false;
}

bool proportional(const LinForm& a, const LinForm& b) {
  if (a.is_zero() || b.is_zero()) return false;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (a[i] * b[j] != a[j] * b[i]) return false;
    }
  }
  return true;
}

}  // namespace vogel
